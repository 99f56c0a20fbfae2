//! Type inference for proof terms.
//!
//! Inference is syntax directed. Injections carry no annotation for the
//! other disjunct, so they are checked against an expected type coming from
//! the surrounding term (an `abs` partner, a `case` binder pair, or a
//! caller-supplied goal).

mod combinators;
mod projection;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::syntax::{fresh_name, Binder, Context, DuplicateVariable, MProp, Mode, Name, Prop, Sign, Term};

pub use combinators::{
    abs_general, classical_strengthen, contrapose, lem, mk_abs_general, mk_contrapose, mk_lem, project_conclusion,
};
pub use projection::project_derivation;

/// The eighteen typing rules.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Rule {
    Ax,
    Abs,
    AndIntroPos,
    OrIntroNeg,
    AndElimPos,
    OrElimNeg,
    OrIntroPos,
    AndIntroNeg,
    OrElimPos,
    AndElimNeg,
    NegIntroPos,
    NegIntroNeg,
    NegElimPos,
    NegElimNeg,
    ClassIntroPos,
    ClassIntroNeg,
    ClassElimPos,
    ClassElimNeg,
}

impl Rule {
    pub const ALL: [Rule; 18] = [
        Rule::Ax,
        Rule::Abs,
        Rule::AndIntroPos,
        Rule::OrIntroNeg,
        Rule::AndElimPos,
        Rule::OrElimNeg,
        Rule::OrIntroPos,
        Rule::AndIntroNeg,
        Rule::OrElimPos,
        Rule::AndElimNeg,
        Rule::NegIntroPos,
        Rule::NegIntroNeg,
        Rule::NegElimPos,
        Rule::NegElimNeg,
        Rule::ClassIntroPos,
        Rule::ClassIntroNeg,
        Rule::ClassElimPos,
        Rule::ClassElimNeg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Ax => "Ax",
            Rule::Abs => "Abs",
            Rule::AndIntroPos => "I&+",
            Rule::OrIntroNeg => "I|-",
            Rule::AndElimPos => "E&+",
            Rule::OrElimNeg => "E|-",
            Rule::OrIntroPos => "I|+",
            Rule::AndIntroNeg => "I&-",
            Rule::OrElimPos => "E|+",
            Rule::AndElimNeg => "E&-",
            Rule::NegIntroPos => "I~+",
            Rule::NegIntroNeg => "I~-",
            Rule::NegElimPos => "E~+",
            Rule::NegElimNeg => "E~-",
            Rule::ClassIntroPos => "IC+",
            Rule::ClassIntroNeg => "IC-",
            Rule::ClassElimPos => "EC+",
            Rule::ClassElimNeg => "EC-",
        }
    }

    fn for_term(t: &Term) -> Option<Rule> {
        let pick = |g: &Sign, p: Rule, n: Rule| if *g == Sign::Pos { p } else { n };
        Some(match t {
            Term::Var(_) => Rule::Ax,
            Term::Bound(_) => return None,
            Term::Abs(..) => Rule::Abs,
            Term::Pair(g, ..) => pick(g, Rule::AndIntroPos, Rule::OrIntroNeg),
            Term::Proj(g, ..) => pick(g, Rule::AndElimPos, Rule::OrElimNeg),
            Term::Inj(g, ..) => pick(g, Rule::OrIntroPos, Rule::AndIntroNeg),
            Term::Case(g, ..) => pick(g, Rule::OrElimPos, Rule::AndElimNeg),
            Term::NegI(g, ..) => pick(g, Rule::NegIntroPos, Rule::NegIntroNeg),
            Term::NegE(g, ..) => pick(g, Rule::NegElimPos, Rule::NegElimNeg),
            Term::CLam(g, ..) => pick(g, Rule::ClassIntroPos, Rule::ClassIntroNeg),
            Term::CApp(g, ..) => pick(g, Rule::ClassElimPos, Rule::ClassElimNeg),
        })
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeError {
    #[error("unbound variable `{0}`")]
    UnboundVariable(Name),
    #[error("rule {rule} expects {expected}, found {found}")]
    ModeMismatch { rule: Rule, expected: String, found: MProp },
    #[error("absurdity needs a strong proposition, found {0}")]
    NotStrong(MProp),
    #[error("case binder annotation {annotation} disagrees with scrutinee type {scrutinee}")]
    AnnotationMismatch { annotation: MProp, scrutinee: MProp },
    #[error("sign mismatch: expected {expected}, found {found}")]
    SignMismatch { expected: MProp, found: MProp },
    #[error("expected {expected}, found {found}")]
    TypeMismatch { expected: MProp, found: MProp },
    #[error("{left} and {right} are not opposite propositions")]
    TypesNotOpposite { left: MProp, right: MProp },
    #[error("cannot infer a type for `{0}`; an expected type is needed")]
    CannotInfer(Term),
    #[error("expected a classical proposition, found {0}")]
    NotClassical(MProp),
    #[error("no assumption named `{0}`")]
    NoSuchAssumption(Name),
    #[error("dangling bound variable in `{0}`")]
    DanglingIndex(Term),
    #[error(transparent)]
    Duplicate(#[from] DuplicateVariable),
}

/// A typing derivation: one rule instance per node.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Derivation {
    pub rule: Rule,
    pub context: Context,
    pub subject: Term,
    pub conclusion: MProp,
    pub premises: Vec<Derivation>,
}

impl Derivation {
    /// Every proposition that appears as a conclusion or assumption anywhere in the tree.
    pub fn mentioned_props(&self) -> Vec<MProp> {
        let mut out = vec![self.conclusion.clone()];
        out.extend(self.context.iter().map(|(_, p)| p.clone()));
        for d in &self.premises {
            out.extend(d.mentioned_props());
        }
        out
    }

    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(Derivation::size).sum::<usize>()
    }

    /// Check every node against the schema of its rule.
    pub fn validate(&self) -> Result<(), String> {
        self.validate_node()?;
        self.premises.iter().try_for_each(Derivation::validate)
    }

    fn validate_node(&self) -> Result<(), String> {
        let bad = |msg: &str| Err(format!("{} node for `{}`: {msg}", self.rule, self.subject));
        if Rule::for_term(&self.subject) != Some(self.rule) {
            return bad("rule does not match the subject");
        }
        let prem = &self.premises;
        let concl = |i: usize| &prem[i].conclusion;
        let same_ctx = |i: usize| prem[i].context == self.context;
        let q = &self.conclusion;
        let classical = |base: &Prop, g: Sign| MProp::new(base.clone(), Mode::classical(g));
        let strong = |base: Prop, g: Sign| MProp::new(base, Mode::strong(g));
        let arity = match self.rule {
            Rule::Ax => 0,
            Rule::Abs | Rule::AndIntroPos | Rule::OrIntroNeg | Rule::ClassElimPos | Rule::ClassElimNeg => 2,
            Rule::OrElimPos | Rule::AndElimNeg => 3,
            _ => 1,
        };
        if prem.len() != arity {
            return bad("wrong number of premises");
        }
        let ok = match &self.subject {
            Term::Var(x) => self.context.lookup(x) == Some(q),
            Term::Abs(ann, t, s) => {
                same_ctx(0)
                    && same_ctx(1)
                    && prem[0].subject == **t
                    && prem[1].subject == **s
                    && concl(0).is_strong()
                    && *concl(1) == concl(0).opposite()
                    && ann == q
            }
            Term::Pair(g, t, s) => {
                let joined = match g {
                    Sign::Pos => Prop::and(concl(0).base.clone(), concl(1).base.clone()),
                    Sign::Neg => Prop::or(concl(0).base.clone(), concl(1).base.clone()),
                };
                same_ctx(0)
                    && same_ctx(1)
                    && prem[0].subject == **t
                    && prem[1].subject == **s
                    && *concl(0) == classical(&concl(0).base, *g)
                    && *concl(1) == classical(&concl(1).base, *g)
                    && *q == strong(joined, *g)
            }
            Term::Proj(g, i, t) => {
                same_ctx(0)
                    && prem[0].subject == **t
                    && concl(0).mode == Mode::strong(*g)
                    && split(&concl(0).base, *g == Sign::Pos).is_some_and(|(a, b)| *q == classical(i.pick(&a, &b), *g))
            }
            Term::Inj(g, i, t) => {
                same_ctx(0)
                    && prem[0].subject == **t
                    && q.mode == Mode::strong(*g)
                    && split(&q.base, *g == Sign::Neg).is_some_and(|(a, b)| *concl(0) == classical(i.pick(&a, &b), *g))
            }
            Term::Case(g, t, b1, s, b2, u) => {
                let scrutinee_ok = split(&concl(0).base, *g == Sign::Neg)
                    .is_some_and(|(a, b)| b1.ty == classical(&a, *g) && b2.ty == classical(&b, *g))
                    && concl(0).mode == Mode::strong(*g);
                same_ctx(0)
                    && prem[0].subject == **t
                    && scrutinee_ok
                    && self.binder_premise(1, b1, s)
                    && self.binder_premise(2, b2, u)
                    && concl(1) == q
                    && concl(2) == q
            }
            Term::NegI(g, t) => {
                same_ctx(0)
                    && prem[0].subject == **t
                    && concl(0).mode == Mode::classical(g.flip())
                    && *q == strong(Prop::neg(concl(0).base.clone()), *g)
            }
            Term::NegE(g, t) => {
                same_ctx(0)
                    && prem[0].subject == **t
                    && concl(0).mode == Mode::strong(*g)
                    && matches!(&concl(0).base, Prop::Neg(a) if *q == classical(a, g.flip()))
            }
            Term::CLam(g, b, body) => {
                self.binder_premise(0, b, body)
                    && b.ty == q.opposite()
                    && q.mode == Mode::classical(*g)
                    && *concl(0) == q.strengthen()
            }
            Term::CApp(g, t, s) => {
                same_ctx(0)
                    && same_ctx(1)
                    && prem[0].subject == **t
                    && prem[1].subject == **s
                    && concl(0).mode == Mode::classical(*g)
                    && *concl(1) == concl(0).opposite()
                    && *q == concl(0).strengthen()
            }
            Term::Bound(_) => false,
        };
        if ok {
            Ok(())
        } else {
            bad("premises do not instantiate the rule")
        }
    }

    fn binder_premise(&self, i: usize, b: &Binder, body: &Term) -> bool {
        let p = &self.premises[i];
        if p.context.len() != self.context.len() + 1 {
            return false;
        }
        let Some((x, ty)) = p.context.iter().last() else { return false };
        !self.context.contains(x) && *ty == b.ty && p.context.without(x) == self.context && p.subject == body.open(x)
    }
}

/// Split `A & B` (when `conj`) or `A | B` into its components.
fn split(p: &Prop, conj: bool) -> Option<(Prop, Prop)> {
    match (p, conj) {
        (Prop::And(a, b), true) | (Prop::Or(a, b), false) => Some(((**a).clone(), (**b).clone())),
        _ => None,
    }
}

/// True when the term has no synthesizable type and must be checked.
fn needs_expected(t: &Term) -> bool {
    match t {
        Term::Inj(..) => true,
        Term::Case(_, _, _, s, _, u) => needs_expected(s) && needs_expected(u),
        _ => false,
    }
}

/// Pick a name for opening a binder body.
fn opening_name(ctx: &Context, b: &Binder, body: &Term) -> String {
    let hint = b.name();
    let base = if hint.starts_with(|c: char| c.is_ascii_alphabetic()) { hint } else { "v" };
    fresh_name(base, &|n| ctx.contains(n) || body.has_free(n))
}

fn leaf(rule: Rule, ctx: &Context, t: &Term, q: MProp, premises: Vec<Derivation>) -> Derivation {
    Derivation { rule, context: ctx.clone(), subject: t.clone(), conclusion: q, premises }
}

fn require_mode(rule: Rule, d: &Derivation, mode: Mode) -> Result<(), TypeError> {
    if d.conclusion.mode == mode {
        Ok(())
    } else {
        Err(TypeError::ModeMismatch {
            rule,
            expected: format!("a proposition of mode {mode}"),
            found: d.conclusion.clone(),
        })
    }
}

/// Infer the type of `t` under `ctx`.
pub fn infer_type(ctx: &Context, t: &Term) -> Result<Derivation, TypeError> {
    infer(ctx, t)
}

/// Check `t` against an expected proposition.
pub fn check_type(ctx: &Context, t: &Term, expected: &MProp) -> Result<Derivation, TypeError> {
    check(ctx, t, expected)
}

/// Infer when possible, otherwise check against `expected`.
pub fn type_of(ctx: &Context, t: &Term, expected: Option<&MProp>) -> Result<Derivation, TypeError> {
    match expected {
        Some(q) => check(ctx, t, q),
        None => infer(ctx, t),
    }
}

fn mismatch(expected: &MProp, found: &MProp) -> TypeError {
    if expected.base == found.base && expected.mode.strength == found.mode.strength {
        TypeError::SignMismatch { expected: expected.clone(), found: found.clone() }
    } else {
        TypeError::TypeMismatch { expected: expected.clone(), found: found.clone() }
    }
}

fn check(ctx: &Context, t: &Term, expected: &MProp) -> Result<Derivation, TypeError> {
    match t {
        Term::Inj(g, i, u) => {
            let rule = Rule::for_term(t).expect("signed former");
            let parts = split(&expected.base, *g == Sign::Neg).filter(|_| expected.mode == Mode::strong(*g));
            let Some((a, b)) = parts else {
                let shape =
                    if *g == Sign::Pos { "a strong affirmed disjunction" } else { "a strong denied conjunction" };
                return Err(TypeError::ModeMismatch { rule, expected: shape.into(), found: expected.clone() });
            };
            let component = MProp::new(i.pick(a, b), Mode::classical(*g));
            let d = check(ctx, u, &component)?;
            Ok(leaf(rule, ctx, t, expected.clone(), vec![d]))
        }
        Term::Case(..) => case(ctx, t, Some(expected)),
        _ => {
            let d = infer(ctx, t)?;
            if d.conclusion == *expected {
                Ok(d)
            } else {
                Err(mismatch(expected, &d.conclusion))
            }
        }
    }
}

fn infer(ctx: &Context, t: &Term) -> Result<Derivation, TypeError> {
    let rule = match Rule::for_term(t) {
        Some(r) => r,
        None => return Err(TypeError::DanglingIndex(t.clone())),
    };
    match t {
        Term::Var(x) => {
            let q = ctx.lookup(x).cloned().ok_or_else(|| TypeError::UnboundVariable(x.clone()))?;
            Ok(leaf(rule, ctx, t, q, vec![]))
        }
        Term::Bound(_) => Err(TypeError::DanglingIndex(t.clone())),
        Term::Abs(q, l, r) => {
            let (dl, dr) = if !needs_expected(l) {
                let dl = infer(ctx, l)?;
                if !dl.conclusion.is_strong() {
                    return Err(TypeError::NotStrong(dl.conclusion));
                }
                let dr = check(ctx, r, &dl.conclusion.opposite())?;
                (dl, dr)
            } else if !needs_expected(r) {
                let dr = infer(ctx, r)?;
                if !dr.conclusion.is_strong() {
                    return Err(TypeError::NotStrong(dr.conclusion));
                }
                let dl = check(ctx, l, &dr.conclusion.opposite())?;
                (dl, dr)
            } else {
                return Err(TypeError::CannotInfer(t.clone()));
            };
            Ok(leaf(rule, ctx, t, q.clone(), vec![dl, dr]))
        }
        Term::Pair(g, l, r) => {
            let dl = infer(ctx, l)?;
            require_mode(rule, &dl, Mode::classical(*g))?;
            let dr = infer(ctx, r)?;
            require_mode(rule, &dr, Mode::classical(*g))?;
            let (a, b) = (dl.conclusion.base.clone(), dr.conclusion.base.clone());
            let base = if *g == Sign::Pos { Prop::and(a, b) } else { Prop::or(a, b) };
            Ok(leaf(rule, ctx, t, MProp::new(base, Mode::strong(*g)), vec![dl, dr]))
        }
        Term::Proj(g, i, u) => {
            let d = infer(ctx, u)?;
            let parts = split(&d.conclusion.base, *g == Sign::Pos).filter(|_| d.conclusion.mode == Mode::strong(*g));
            let Some((a, b)) = parts else {
                let shape =
                    if *g == Sign::Pos { "a strong affirmed conjunction" } else { "a strong denied disjunction" };
                return Err(TypeError::ModeMismatch { rule, expected: shape.into(), found: d.conclusion });
            };
            let q = MProp::new(i.pick(a, b), Mode::classical(*g));
            Ok(leaf(rule, ctx, t, q, vec![d]))
        }
        Term::Inj(..) => Err(TypeError::CannotInfer(t.clone())),
        Term::Case(..) => case(ctx, t, None),
        Term::NegI(g, u) => {
            let d = infer(ctx, u)?;
            require_mode(rule, &d, Mode::classical(g.flip()))?;
            let q = MProp::new(Prop::neg(d.conclusion.base.clone()), Mode::strong(*g));
            Ok(leaf(rule, ctx, t, q, vec![d]))
        }
        Term::NegE(g, u) => {
            let d = infer(ctx, u)?;
            let inner = match &d.conclusion.base {
                Prop::Neg(a) if d.conclusion.mode == Mode::strong(*g) => (**a).clone(),
                _ => {
                    let shape = if *g == Sign::Pos { "a strong affirmed negation" } else { "a strong denied negation" };
                    return Err(TypeError::ModeMismatch { rule, expected: shape.into(), found: d.conclusion });
                }
            };
            Ok(leaf(rule, ctx, t, MProp::new(inner, Mode::classical(g.flip())), vec![d]))
        }
        Term::CLam(g, b, body) => {
            if b.ty.mode != Mode::classical(g.flip()) {
                return Err(TypeError::ModeMismatch {
                    rule,
                    expected: format!("a binder of mode {}", Mode::classical(g.flip())),
                    found: b.ty.clone(),
                });
            }
            let x = opening_name(ctx, b, body);
            let inner = ctx.extended(&x, b.ty.clone())?;
            let goal = MProp::new(b.ty.base.clone(), Mode::strong(*g));
            let d = check(&inner, &body.open(&x), &goal)?;
            Ok(leaf(rule, ctx, t, b.ty.opposite(), vec![d]))
        }
        Term::CApp(g, l, r) => {
            let dl = infer(ctx, l)?;
            require_mode(rule, &dl, Mode::classical(*g))?;
            let dr = check(ctx, r, &dl.conclusion.opposite())?;
            let q = dl.conclusion.strengthen();
            Ok(leaf(rule, ctx, t, q, vec![dl, dr]))
        }
    }
}

fn case(ctx: &Context, t: &Term, expected: Option<&MProp>) -> Result<Derivation, TypeError> {
    let Term::Case(g, scrut, b1, s1, b2, s2) = t else { unreachable!("case called on a non-case term") };
    let rule = Rule::for_term(t).expect("signed former");
    for b in [b1, b2] {
        if b.ty.mode != Mode::classical(*g) {
            return Err(TypeError::ModeMismatch {
                rule,
                expected: format!("binders of mode {}", Mode::classical(*g)),
                found: b.ty.clone(),
            });
        }
    }
    let (a, b) = (b1.ty.base.clone(), b2.ty.base.clone());
    let joined = if *g == Sign::Pos { Prop::or(a, b) } else { Prop::and(a, b) };
    let scrutinee_ty = MProp::new(joined, Mode::strong(*g));
    let ds = if needs_expected(scrut) {
        check(ctx, scrut, &scrutinee_ty)?
    } else {
        let d = infer(ctx, scrut)?;
        if d.conclusion != scrutinee_ty {
            let annotation = if split(&d.conclusion.base, *g == Sign::Neg).is_some_and(|(l, _)| l == b1.ty.base) {
                b2.ty.clone()
            } else {
                b1.ty.clone()
            };
            return Err(TypeError::AnnotationMismatch { annotation, scrutinee: d.conclusion });
        }
        d
    };
    let x = opening_name(ctx, b1, s1);
    let y = opening_name(ctx, b2, s2);
    let c1 = ctx.extended(&x, b1.ty.clone())?;
    let c2 = ctx.extended(&y, b2.ty.clone())?;
    let (o1, o2) = (s1.open(&x), s2.open(&y));
    let (d1, d2) = match expected {
        Some(q) => (check(&c1, &o1, q)?, check(&c2, &o2, q)?),
        None if !needs_expected(&o1) => {
            let d1 = infer(&c1, &o1)?;
            let d2 = check(&c2, &o2, &d1.conclusion)?;
            (d1, d2)
        }
        None => {
            let d2 = infer(&c2, &o2)?;
            let d1 = check(&c1, &o1, &d2.conclusion)?;
            (d1, d2)
        }
    };
    let q = d1.conclusion.clone();
    Ok(Derivation { rule, context: ctx.clone(), subject: t.clone(), conclusion: q, premises: vec![ds, d1, d2] })
}

/// Shared constructor used by combinators: a vacuous classical lambda.
pub(crate) fn clam_vacuous(sign: Sign, ty: MProp, body: Term) -> Term {
    Term::CLam(sign, Binder::new("u", ty), Arc::new(body.shift(1, 0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_mprop, parse_term, Idx};

    fn ctx(entries: &[(&str, &str)]) -> Context {
        Context::from_entries(entries.iter().map(|(x, p)| (*x, parse_mprop(p).unwrap()))).unwrap()
    }

    #[test]
    fn pair_of_classical_affirmations() {
        let c = ctx(&[("x", "a^c+"), ("y", "b^c+")]);
        let d = infer_type(&c, &parse_term("pair+(x, y)").unwrap()).unwrap();
        assert_eq!(d.conclusion, parse_mprop("(a & b)^s+").unwrap());
        assert_eq!(d.rule, Rule::AndIntroPos);
        d.validate().unwrap();
    }

    #[test]
    fn classical_lambda_with_unused_binder() {
        let c = ctx(&[("x", "a^s+")]);
        let d = infer_type(&c, &parse_term("clam+(k : a^c-. x)").unwrap()).unwrap();
        assert_eq!(d.conclusion, parse_mprop("a^c+").unwrap());
        d.validate().unwrap();
    }

    #[test]
    fn projection_of_atom_is_mode_mismatch() {
        let c = ctx(&[("x", "a^s+")]);
        let e = infer_type(&c, &Term::proj(Sign::Pos, Idx::One, Term::var("x"))).unwrap_err();
        assert!(matches!(e, TypeError::ModeMismatch { rule: Rule::AndElimPos, .. }));
    }

    #[test]
    fn abs_on_classical_is_not_strong() {
        let c = ctx(&[("x", "a^c+"), ("y", "a^c-")]);
        let e = infer_type(&c, &parse_term("abs[b^s+](x, y)").unwrap()).unwrap_err();
        assert!(matches!(e, TypeError::NotStrong(_)));
    }

    #[test]
    fn unbound_and_annotation_errors() {
        assert!(matches!(infer_type(&Context::new(), &Term::var("z")).unwrap_err(), TypeError::UnboundVariable(_)));
        let c = ctx(&[("t", "(a | b)^s+"), ("k", "c^c+")]);
        let e = infer_type(&c, &parse_term("case+(t, x : a^c+. k, y : c^c+. k)").unwrap()).unwrap_err();
        assert!(matches!(e, TypeError::AnnotationMismatch { .. }));
    }

    #[test]
    fn injection_checked_against_abs_partner() {
        let c = ctx(&[("x", "a^c+"), ("p", "a^c-"), ("q", "b^c-")]);
        let t = parse_term("abs[c^s+](in1+(x), pair-(p, q))").unwrap();
        let d = infer_type(&c, &t).unwrap();
        assert_eq!(d.conclusion, parse_mprop("c^s+").unwrap());
        d.validate().unwrap();
        assert!(matches!(infer_type(&c, &parse_term("in1+(x)").unwrap()), Err(TypeError::CannotInfer(_))));
        let goal = parse_mprop("(a | z)^s+").unwrap();
        check_type(&c, &parse_term("in1+(x)").unwrap(), &goal).unwrap().validate().unwrap();
    }

    #[test]
    fn sign_mismatch_on_wrong_polarity() {
        let c = ctx(&[("x", "a^c+")]);
        let e = check_type(&c, &Term::var("x"), &parse_mprop("a^c-").unwrap()).unwrap_err();
        assert!(matches!(e, TypeError::SignMismatch { .. }));
    }

    #[test]
    fn case_binders_are_opened_freshly() {
        let c = ctx(&[("x", "(a | b)^s+"), ("k", "c^s+")]);
        let t = parse_term("case+(x, x : a^c+. k, x : b^c+. k)").unwrap();
        let d = infer_type(&c, &t).unwrap();
        d.validate().unwrap();
        assert_eq!(d.premises[1].context.len(), 3);
    }
}
