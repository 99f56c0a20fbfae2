//! A fixed library of provable judgments: excluded middle and
//! non-contradiction at several formulas, each introduction and elimination
//! rule, and the conclusions of the admissible rules.

use crate::classical::{casec, inic, lemc, pairc, projic};
use crate::syntax::{parse_judgment, parse_pure, Context, Idx, MProp, Mode, Prop, Sign, Term};
use crate::typing::{mk_abs_general, mk_contrapose, mk_lem, project_conclusion, TypeError};

/// A typed judgment `context |- term : conclusion`.
#[derive(Clone, Debug)]
pub struct LibraryEntry {
    pub name: &'static str,
    pub context: Context,
    pub term: Term,
    pub conclusion: MProp,
}

fn pure(s: &str) -> Prop {
    parse_pure(s).expect("library formula")
}

fn closed(name: &'static str, term: Term, base: Prop, mode: Mode) -> (&'static str, Context, Term, MProp) {
    (name, Context::new(), term, MProp::new(base, mode))
}

fn parsed(name: &'static str, src: &str) -> (&'static str, Context, Term, MProp) {
    let j = parse_judgment(src).expect("library judgment");
    (name, j.context, j.term, j.expected.expect("library judgments state their type"))
}

fn ctx(entries: &[(&str, &str)]) -> Context {
    Context::from_entries(entries.iter().map(|(x, p)| (*x, crate::syntax::parse_mprop(p).expect("library type"))))
        .expect("distinct names")
}

/// The twenty judgments, each re-checked by the type checker.
pub fn provable_library() -> Result<Vec<LibraryEntry>, TypeError> {
    let lem_p = |a: &str| {
        let a = pure(a);
        (mk_lem(&a, Sign::Pos), Prop::or(a.clone(), Prop::neg(a)))
    };
    let lem_n = |a: &str| {
        let a = pure(a);
        (mk_lem(&a, Sign::Neg), Prop::and(a.clone(), Prop::neg(a)))
    };
    let (a, b) = (pure("a"), pure("b"));
    let cp = |p: &Prop| MProp::new(p.clone(), Mode::CLASSICAL_POS);

    let mut raw = Vec::new();
    for (name, src) in [("lemP a", "a"), ("lemP ~a", "~a"), ("lemP (a & b)", "(a & b)"), ("lemP ~(a | b)", "~(a | b)")]
    {
        let (t, p) = lem_p(src);
        raw.push(closed(name, t, p, Mode::CLASSICAL_POS));
    }
    for (name, src) in [("lemN a", "a"), ("lemN (a | b)", "(a | b)")] {
        let (t, p) = lem_n(src);
        raw.push(closed(name, t, p, Mode::CLASSICAL_NEG));
    }
    raw.extend([
        parsed("axiom", "x : a^s+ |- x : a^s+"),
        parsed("pair", "x : a^c+, y : b^c+ |- pair+(x, y) : (a & b)^s+"),
        parsed("projection", "x : (a & b)^s+ |- proj1+(x) : a^c+"),
        parsed("injection", "x : b^c- |- in2-(x) : (a & b)^s-"),
        parsed("negation intro", "x : a^c- |- negi+(x) : ~a^s+"),
        parsed("negation elim", "x : ~a^s+ |- nege+(x) : a^c-"),
        parsed("case swap", "x : (a | b)^s+ |- case+(x, y : a^c+. in2+(y), z : b^c+. in1+(z)) : (b | a)^s+"),
        parsed("classical application", "x : a^c+, y : a^c- |- capp+(x, y) : a^s+"),
        parsed("absurdity", "x : a^s+, y : a^s- |- abs[b^s-](x, y) : b^s-"),
    ]);

    let g = ctx(&[("x", "a^c+"), ("y", "a^c-")]);
    let t = mk_abs_general(&g, crate::syntax::parse_mprop("b^c+").expect("type"), Term::var("x"), Term::var("y"))?;
    raw.push(("generalized absurdity", g, t, cp(&b)));

    let g = ctx(&[("x", "a^c+"), ("k", "b^s+")]);
    let t = mk_contrapose(&g, "x", "w", &Term::var("k"))?;
    raw.push(("contraposition", ctx(&[("k", "b^s+"), ("w", "b^s-")]), t, MProp::new(a.clone(), Mode::CLASSICAL_NEG)));

    let k = MProp::new(a.clone(), Mode::STRONG_POS);
    raw.push(("projection of conclusions", ctx(&[("k", "a^s+")]), project_conclusion(Term::var("k"), &k), cp(&a)));

    let t = projic(Idx::Two, &a, &b, pairc(&a, &b, Term::var("x"), Term::var("y")));
    raw.push(("classical pair projection", ctx(&[("x", "a^c+"), ("y", "b^c+")]), t, cp(&b)));

    let na = Prop::neg(a.clone());
    let swap = Prop::or(na.clone(), a.clone());
    let t = casec(
        &a,
        &na,
        &swap,
        lemc(&a),
        "x",
        inic(Idx::Two, &na, &a, Term::var("x")),
        inic(Idx::One, &na, &a, Term::var("x")),
    );
    raw.push(("excluded middle swapped", Context::new(), t, cp(&swap)));

    raw.into_iter()
        .map(|(name, context, term, conclusion)| {
            crate::typing::check_type(&context, &term, &conclusion)?;
            Ok(LibraryEntry { name, context, term, conclusion })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twenty_typed_judgments() {
        let lib = provable_library().unwrap();
        assert_eq!(lib.len(), 20);
    }
}
