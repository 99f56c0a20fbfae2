//! Normal and neutral terms by grammar, canonical shapes, and the three
//! clauses of the canonicity theorem.

use thiserror::Error;

use crate::syntax::Term;
use crate::typing::Derivation;

/// Membership in the grammar of normal terms.
pub fn is_normal(t: &Term) -> bool {
    match t {
        Term::Pair(_, a, b) => is_normal(a) && is_normal(b),
        Term::Inj(_, _, a) | Term::NegI(_, a) | Term::CLam(_, _, a) => is_normal(a),
        _ => is_neutral(t),
    }
}

/// Membership in the grammar of neutral terms.
pub fn is_neutral(t: &Term) -> bool {
    match t {
        Term::Var(_) | Term::Bound(_) => true,
        Term::Proj(_, _, s) | Term::NegE(_, s) => is_neutral(s),
        Term::Case(_, s, _, n1, _, n2) => is_neutral(s) && is_normal(n1) && is_normal(n2),
        Term::CApp(_, s, n) => is_neutral(s) && is_normal(n),
        Term::Abs(_, a, b) => (is_neutral(a) && is_normal(b)) || (is_normal(a) && is_neutral(b)),
        _ => false,
    }
}

pub fn is_canonical(t: &Term) -> bool {
    matches!(t, Term::Pair(..) | Term::Inj(..) | Term::NegI(..) | Term::CLam(..))
}

fn is_explosion(t: &Term) -> bool {
    matches!(t, Term::Abs(..) | Term::CApp(..))
}

fn is_open_explosion(t: &Term) -> bool {
    is_explosion(t) && !t.free_vars().is_empty()
}

/// Strip a case-context (scrutinee positions of `case`).
fn under_case_context(t: &Term) -> &Term {
    match t {
        Term::Case(_, s, ..) => under_case_context(s),
        _ => t,
    }
}

/// Strip an eliminative context (`proj`, `case` scrutinee, `nege`).
fn under_elim_context(t: &Term) -> &Term {
    match t {
        Term::Case(_, s, ..) | Term::Proj(_, _, s) | Term::NegE(_, s) => under_elim_context(s),
        _ => t,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StrongShape {
    Canonical,
    CaseOverOpenExplosion,
    Other,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClassicalShape {
    ClassicalLambda,
    ElimOverVariable,
    ElimOverOpenExplosion,
    Other,
}

/// Which clause of the canonicity theorem applies, and the shape found.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Canonicity {
    /// Closed term: must be canonical once normal.
    Closed { canonical: bool },
    /// Classical context, strong conclusion.
    ClassicalStrong(StrongShape),
    /// Classical context, classical conclusion.
    ClassicalClassical(ClassicalShape),
    /// The context has a strong assumption; no clause applies.
    NotApplicable,
}

impl Canonicity {
    /// Does the shape match what the theorem promises for a normal form?
    pub fn holds(self) -> bool {
        match self {
            Canonicity::Closed { canonical } => canonical,
            Canonicity::ClassicalStrong(s) => s != StrongShape::Other,
            Canonicity::ClassicalClassical(s) => s != ClassicalShape::Other,
            Canonicity::NotApplicable => true,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ShapeReport {
    pub normal: bool,
    pub neutral: bool,
    pub canonical: bool,
    pub canonicity: Option<Canonicity>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("derivation subject `{derivation}` differs from the classified term `{term}`")]
pub struct ShapeError {
    pub term: Term,
    pub derivation: Term,
}

pub fn classify(t: &Term, d: Option<&Derivation>) -> Result<ShapeReport, ShapeError> {
    let canonicity = match d {
        None => None,
        Some(d) if d.subject != *t => {
            return Err(ShapeError { term: t.clone(), derivation: d.subject.clone() });
        }
        Some(d) => Some(canonicity(t, d)),
    };
    Ok(ShapeReport { normal: is_normal(t), neutral: is_neutral(t), canonical: is_canonical(t), canonicity })
}

fn canonicity(t: &Term, d: &Derivation) -> Canonicity {
    if t.free_vars().is_empty() {
        return Canonicity::Closed { canonical: is_canonical(t) };
    }
    if !d.context.iter().all(|(_, p)| p.is_classical()) {
        return Canonicity::NotApplicable;
    }
    if d.conclusion.is_strong() {
        let shape = if is_canonical(t) {
            StrongShape::Canonical
        } else if is_open_explosion(under_case_context(t)) {
            StrongShape::CaseOverOpenExplosion
        } else {
            StrongShape::Other
        };
        Canonicity::ClassicalStrong(shape)
    } else {
        let core = under_elim_context(t);
        let shape = if matches!(t, Term::CLam(..)) {
            ClassicalShape::ClassicalLambda
        } else if matches!(core, Term::Var(_)) {
            ClassicalShape::ElimOverVariable
        } else if is_open_explosion(core) {
            ClassicalShape::ElimOverOpenExplosion
        } else {
            ClassicalShape::Other
        };
        Canonicity::ClassicalClassical(shape)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_mprop, parse_term, Context};
    use crate::typing::infer_type;

    #[test]
    fn subformula_counterexample_is_neutral() {
        let t = parse_term("abs[a^s+](abs[b^s+](x, y), abs[b^s-](x, y))").unwrap();
        let r = classify(&t, None).unwrap();
        assert!(r.normal && r.neutral && !r.canonical);
    }

    #[test]
    fn pair_is_canonical() {
        let r = classify(&parse_term("pair+(x, y)").unwrap(), None).unwrap();
        assert!(r.normal && r.canonical && !r.neutral);
        let r = classify(&parse_term("proj1+(pair+(x, y))").unwrap(), None).unwrap();
        assert!(!r.normal);
    }

    #[test]
    fn canonicity_clauses() {
        let ctx = Context::from_entries([
            ("x", parse_mprop("(a | b)^c+").unwrap()),
            ("y", parse_mprop("(a | b)^c-").unwrap()),
        ])
        .unwrap();
        let t = parse_term("capp+(x, y)").unwrap();
        let d = infer_type(&ctx, &t).unwrap();
        let r = classify(&t, Some(&d)).unwrap();
        assert_eq!(r.canonicity, Some(Canonicity::ClassicalStrong(StrongShape::CaseOverOpenExplosion)));
        let d = infer_type(&ctx, &Term::var("x")).unwrap();
        let r = classify(&Term::var("x"), Some(&d)).unwrap();
        assert_eq!(r.canonicity, Some(Canonicity::ClassicalClassical(ClassicalShape::ElimOverVariable)));
        assert!(classify(&t, Some(&d)).is_err());
    }
}
