//! Classical logic inside PRK: the strength-erasing map, truth tables, the
//! decision procedure for all-classical-affirmation sequents, and the
//! compilation of classical natural deduction into proof terms.

mod combinators;
mod computation;
mod nk;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::syntax::{MProp, Mode, Name, Prop, Sign};
use crate::typing::TypeError;

pub use combinators::{appc, casec, explosion, falsity, implies, inic, lamc, lemc, negapc, neglamc, pairc, projic};
pub use computation::{run_classical_rule, symbolic_rule, ClassicalRule, RuleKind, RuleOutcome};
pub use nk::{embed_nk, nk_context, parse_nk, random_nk_proof, NKError, NKParseError, NKProof, NKRule};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassicalError {
    #[error("`{0}` is not a classical affirmation")]
    WrongMode(MProp),
    #[error(transparent)]
    InvalidNKProof(#[from] NKError),
    #[error(transparent)]
    Type(#[from] TypeError),
}

/// `A` for affirmations and `~A` for denials, whatever the strength.
pub fn classem(p: &MProp) -> Prop {
    match p.sign() {
        Sign::Pos => p.base.clone(),
        Sign::Neg => Prop::neg(p.base.clone()),
    }
}

/// Truth value of `p` under the valuation given by the set of true variables.
pub fn eval(p: &Prop, truth: &dyn Fn(&str) -> bool) -> bool {
    match p {
        Prop::Var(x) => truth(x),
        Prop::And(a, b) => eval(a, truth) && eval(b, truth),
        Prop::Or(a, b) => eval(a, truth) || eval(b, truth),
        Prop::Neg(a) => !eval(a, truth),
    }
}

/// Does every valuation satisfying all of `hyps` satisfy `goal`?
pub fn tt_valid(hyps: &[Prop], goal: &Prop) -> bool {
    let vars: Vec<Name> =
        hyps.iter().chain(std::iter::once(goal)).flat_map(Prop::vars).collect::<BTreeSet<_>>().into_iter().collect();
    assert!(vars.len() < 64, "truth tables over more than 63 variables are out of reach");
    (0u64..1 << vars.len()).all(|row| {
        let truth = |x: &str| vars.iter().position(|v| &**v == x).is_some_and(|i| row >> i & 1 == 1);
        !hyps.iter().all(|h| eval(h, &truth)) || eval(goal, &truth)
    })
}

/// Provability of `hyps |- goal` when every proposition is a classical affirmation.
pub fn decide_oplus(hyps: &[MProp], goal: &MProp) -> Result<bool, ClassicalError> {
    if let Some(bad) = hyps.iter().chain(std::iter::once(goal)).find(|p| p.mode != Mode::CLASSICAL_POS) {
        return Err(ClassicalError::WrongMode(bad.clone()));
    }
    let images: Vec<Prop> = hyps.iter().map(classem).collect();
    Ok(tt_valid(&images, &classem(goal)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_mprop, parse_pure};

    fn mp(s: &str) -> MProp {
        parse_mprop(s).unwrap()
    }

    fn p(s: &str) -> Prop {
        parse_pure(s).unwrap()
    }

    #[test]
    fn classem_images() {
        assert_eq!(classem(&mp("a^c+")), p("a"));
        assert_eq!(classem(&mp("a^c-")), p("~a"));
        assert_eq!(classem(&mp("a^s-")), p("~a"));
        assert_eq!(classem(&mp("(a & b)^s+")), p("(a & b)"));
    }

    #[test]
    fn truth_tables() {
        assert!(tt_valid(&[], &p("(a | ~a)")));
        assert!(tt_valid(&[p("a")], &p("a")));
        assert!(!tt_valid(&[], &p("a")));
        assert!(tt_valid(&[p("(a & ~a)")], &p("b")));
        assert!(!tt_valid(&[p("(a | b)")], &p("a")));
    }

    #[test]
    fn fragment_decision() {
        assert!(decide_oplus(&[], &mp("(a | ~a)^c+")).unwrap());
        assert!(decide_oplus(&[mp("a^c+")], &mp("a^c+")).unwrap());
        assert!(!decide_oplus(&[], &mp("a^c+")).unwrap());
        assert!(matches!(decide_oplus(&[mp("a^s+")], &mp("a^c+")), Err(ClassicalError::WrongMode(_))));
        assert!(matches!(decide_oplus(&[], &mp("a^c-")), Err(ClassicalError::WrongMode(_))));
    }
}
