//! The computation rules of the classical combinators, checked by running
//! the eta-calculus on the redex side and comparing with the stated reduct.

use std::fmt;

use crate::rewrite::{normalize, Calculus, Trace};
use crate::syntax::{Context, Idx, MProp, Mode, Prop, Sign, Term};
use crate::typing::{check_type, clam_vacuous, contrapose, TypeError};

use super::combinators::{appc, casec, inic, lamc, lemc, pairc, projic};

const FUEL: usize = 100_000;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RuleKind {
    /// `projic(pairc(t1, t2)) ->* ti`
    Proj(Idx),
    /// `casec(inic(t), x.s1, x.s2) ->* si{x:=t}`
    Case(Idx),
    /// `appc(lamc x.t, s) ->* t{x:=s}`
    App,
    /// `casec(lemC A, x.s1, x.s2) ->* clam+(y. capp+(s2{x:=s1*}, y))`
    Lem,
}

impl RuleKind {
    pub const ALL: [RuleKind; 6] = [
        RuleKind::Proj(Idx::One),
        RuleKind::Proj(Idx::Two),
        RuleKind::Case(Idx::One),
        RuleKind::Case(Idx::Two),
        RuleKind::App,
        RuleKind::Lem,
    ];
}

impl fmt::Display for RuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleKind::Proj(i) => write!(f, "proj{}", i.number()),
            RuleKind::Case(i) => write!(f, "case{}", i.number()),
            RuleKind::App => f.write_str("app"),
            RuleKind::Lem => f.write_str("lem"),
        }
    }
}

/// A redex side and its expected reduct, both of type `ty` under `context`.
#[derive(Clone, Debug)]
pub struct ClassicalRule {
    pub kind: RuleKind,
    pub context: Context,
    pub ty: MProp,
    pub redex: Term,
    pub reduct: Term,
}

#[derive(Clone, Debug)]
pub struct RuleOutcome {
    pub normal_form: Term,
    pub trace: Trace,
    /// The normal form of the redex side is exactly the stated reduct.
    pub holds: bool,
}

fn cplus(a: &Prop) -> MProp {
    MProp::new(a.clone(), Mode::CLASSICAL_POS)
}

fn cminus(a: &Prop) -> MProp {
    MProp::new(a.clone(), Mode::CLASSICAL_NEG)
}

impl ClassicalRule {
    pub fn proj(i: Idx, context: Context, a1: &Prop, a2: &Prop, t1: Term, t2: Term) -> ClassicalRule {
        let redex = projic(i, a1, a2, pairc(a1, a2, t1.clone(), t2.clone()));
        ClassicalRule { kind: RuleKind::Proj(i), context, ty: cplus(i.pick(a1, a2)), redex, reduct: i.pick(t1, t2) }
    }

    /// `si` mentions `x : Ai^c+` and proves `c^c+`; `t` proves `Ai^c+`.
    #[allow(clippy::too_many_arguments)]
    pub fn case(
        i: Idx,
        context: Context,
        a: &Prop,
        b: &Prop,
        c: &Prop,
        t: Term,
        x: &str,
        s1: Term,
        s2: Term,
    ) -> ClassicalRule {
        let reduct = i.pick(&s1, &s2).substitute(x, &t);
        let redex = casec(a, b, c, inic(i, a, b, t), x, s1, s2);
        ClassicalRule { kind: RuleKind::Case(i), context, ty: cplus(c), redex, reduct }
    }

    /// `t` mentions `x : a^c+` and proves `b^c+`; `s` proves `a^c+`.
    pub fn app(context: Context, a: &Prop, b: &Prop, x: &str, t: Term, s: Term) -> ClassicalRule {
        let reduct = t.substitute(x, &s);
        let redex = appc(a, b, lamc(a, b, x, t), s);
        ClassicalRule { kind: RuleKind::App, context, ty: cplus(b), redex, reduct }
    }

    /// `s1` proves `c^c+` from `x : a^c+` and `s2` from `x : (~a)^c+`.
    pub fn lem(context: Context, a: &Prop, c: &Prop, x: &str, s1: Term, s2: Term) -> ClassicalRule {
        let na = Prop::neg(a.clone());
        let redex = casec(a, &na, c, lemc(a), x, s1.clone(), s2.clone());
        let y = crate::syntax::fresh_name("y", &|n| n == x || s1.has_free(n) || s2.has_free(n));
        let refute = contrapose(x, &cplus(a), &y, Mode::CLASSICAL_POS, s1);
        let s1_star = clam_vacuous(Sign::Pos, cminus(&na), Term::negi(Sign::Pos, refute));
        let body = Term::capp(Sign::Pos, s2.substitute(x, &s1_star), Term::var(&y));
        let reduct = Term::clam(Sign::Pos, &y, cminus(c), body);
        ClassicalRule { kind: RuleKind::Lem, context, ty: cplus(c), redex, reduct }
    }
}

/// A neutral piece of `c^c+` mentioning `x : a^c+`, built from fresh free
/// variables `f{tag} : a^c-` and `g{tag} : a^c+`.
fn probe(ctx: &mut Context, tag: &str, x: &str, a: &Prop, c: &Prop) -> Term {
    let (f, g) = (format!("f{tag}"), format!("g{tag}"));
    ctx.insert(&f, cminus(a)).expect("fresh probe name");
    ctx.insert(&g, cplus(a)).expect("fresh probe name");
    let left = Term::capp(Sign::Neg, Term::var(&f), Term::var(x));
    let right = Term::capp(Sign::Pos, Term::var(&g), Term::var(&f));
    let refuted = MProp::new(Prop::neg(c.clone()), Mode::STRONG_NEG);
    Term::nege(Sign::Neg, Term::abs(refuted, left, right))
}

/// Each rule instantiated with symbolic pieces: free variables, and for the
/// pieces under a binder, neutral terms that mention the bound variable.
pub fn symbolic_rule(kind: RuleKind) -> ClassicalRule {
    let (a, b, c) = (Prop::var("a"), Prop::var("b"), Prop::var("c"));
    let mut ctx = Context::new();
    match kind {
        RuleKind::Proj(i) => {
            ctx.insert("t1", cplus(&a)).expect("fresh");
            ctx.insert("t2", cplus(&b)).expect("fresh");
            ClassicalRule::proj(i, ctx, &a, &b, Term::var("t1"), Term::var("t2"))
        }
        RuleKind::Case(i) => {
            ctx.insert("t", cplus(i.pick(&a, &b))).expect("fresh");
            let s1 = probe(&mut ctx, "1", "x", &a, &c);
            let s2 = probe(&mut ctx, "2", "x", &b, &c);
            ClassicalRule::case(i, ctx, &a, &b, &c, Term::var("t"), "x", s1, s2)
        }
        RuleKind::App => {
            ctx.insert("s", cplus(&a)).expect("fresh");
            let t = probe(&mut ctx, "", "x", &a, &b);
            ClassicalRule::app(ctx, &a, &b, "x", t, Term::var("s"))
        }
        RuleKind::Lem => {
            let s1 = probe(&mut ctx, "1", "x", &a, &c);
            let s2 = probe(&mut ctx, "2", "x", &Prop::neg(a.clone()), &c);
            ClassicalRule::lem(ctx, &a, &c, "x", s1, s2)
        }
    }
}

/// Type both sides, normalize the redex side with eta, and compare.
pub fn run_classical_rule(rule: &ClassicalRule) -> Result<RuleOutcome, TypeError> {
    check_type(&rule.context, &rule.redex, &rule.ty)?;
    check_type(&rule.context, &rule.reduct, &rule.ty)?;
    let (normal_form, trace) = normalize(&rule.redex, Calculus::Eta, FUEL).expect("typed terms normalize");
    let holds = normal_form == rule.reduct;
    Ok(RuleOutcome { normal_form, trace, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::combinators::{negapc, neglamc};
    use crate::rewrite::is_normal;

    #[test]
    fn all_rules_hold_symbolically() {
        for kind in RuleKind::ALL {
            let rule = symbolic_rule(kind);
            assert!(is_normal(&rule.reduct), "{kind}: stated reduct is not normal");
            let out = run_classical_rule(&rule).unwrap();
            assert!(out.holds, "{kind}: {} vs {}", out.normal_form, rule.reduct);
            assert!(!out.trace.is_empty());
        }
    }

    #[test]
    fn lem_reduct_keeps_the_refutation() {
        let rule = symbolic_rule(RuleKind::Lem);
        let text = rule.reduct.to_string();
        assert!(text.contains("negi+"), "{text}");
        assert!(rule.reduct.has_free("f1") && rule.reduct.has_free("f2"));
    }

    #[test]
    fn negation_detour_does_not_simulate_substitution() {
        let a = Prop::var("a");
        let mut ctx = Context::new();
        ctx.insert("f", cplus(&super::super::falsity())).unwrap();
        ctx.insert("s", cplus(&a)).unwrap();
        let t = negapc(&a, neglamc(&a, "x", Term::var("f")), Term::var("s"));
        check_type(&ctx, &t, &cplus(&super::super::falsity())).unwrap();
        let (nf, _) = normalize(&t, Calculus::Eta, FUEL).unwrap();
        assert_ne!(nf, Term::var("f"));
    }
}
