//! Classical projection of one assumption in a derivation.
//!
//! Given a derivation of `Γ, x:P ⊢ t : Q`, builds a term `t'` with
//! `Γ, x:⌊P⌋ ⊢ t' : ⌊Q⌋` by recursion on the derivation. Eliminations of
//! strong connectives go through classical strengthening and, for case
//! analysis, contraposition of both branches.

use crate::syntax::{MProp, Mode, Prop, Sign, Term};

use super::combinators::{abs_general, classical_strengthen, contrapose, fresh_for, project_conclusion};
use super::{check_type, clam_vacuous, Derivation, TypeError};

/// Truncate the assumption `target` of `d` and return the derivation of the projected term.
pub fn project_derivation(d: &Derivation, target: &str) -> Result<Derivation, TypeError> {
    let p = d.context.lookup(target).cloned().ok_or_else(|| TypeError::NoSuchAssumption(target.into()))?;
    let q = d.conclusion.truncate();
    let ctx = d.context.with_updated(target, p.truncate()).expect("target is declared");
    let term = if p.is_classical() { project_conclusion(d.subject.clone(), &d.conclusion) } else { project(d, target) };
    check_type(&ctx, &term, &q)
}

fn cl(base: &Prop, g: Sign) -> MProp {
    MProp::new(base.clone(), Mode::classical(g))
}

fn project(d: &Derivation, target: &str) -> Term {
    let ih = |i: usize| project(&d.premises[i], target);
    let q = &d.conclusion;
    match &d.subject {
        Term::Var(z) if &**z == target => d.subject.clone(),
        Term::Var(_) => project_conclusion(d.subject.clone(), q),
        Term::Abs(..) => {
            let r = d.premises[0].conclusion.truncate();
            abs_general(q.truncate(), r.mode, ih(0), ih(1))
        }
        Term::Pair(g, ..) => project_conclusion(Term::pair(*g, ih(0), ih(1)), q),
        Term::Inj(g, i, _) => project_conclusion(Term::inj(*g, *i, ih(0)), q),
        Term::NegI(g, _) => project_conclusion(Term::negi(*g, ih(0)), q),
        Term::Proj(g, i, _) => {
            // u : (A1 * A2) strong, result Ai classical
            let u = ih(0);
            let scrut = &d.premises[0].conclusion;
            let w = fresh_for("w", &d.context, &[&u]);
            let xi = clam_vacuous(g.flip(), cl(&scrut.base, *g), Term::inj(g.flip(), *i, Term::var(&w)));
            let body = Term::proj(*g, *i, Term::capp(*g, u, xi));
            classical_strengthen(&w, q, body)
        }
        Term::NegE(g, _) => {
            // u : (~A) strong of sign g, result A classical of sign -g
            let u = ih(0);
            let scrut = &d.premises[0].conclusion;
            let w = fresh_for("w", &d.context, &[&u]);
            let xi = clam_vacuous(g.flip(), cl(&scrut.base, *g), Term::negi(g.flip(), Term::var(&w)));
            let body = Term::nege(*g, Term::capp(*g, u, xi));
            classical_strengthen(&w, q, body)
        }
        Term::Case(g, _, b1, _, b2, _) => {
            let u = ih(0);
            let (s1, s2) = (ih(1), ih(2));
            let x1 = opened_name(&d.premises[1]);
            let x2 = opened_name(&d.premises[2]);
            let r = q.truncate();
            let w = fresh_for("w", &d.premises[1].context, &[&u, &s1, &s2]);
            let w = if d.premises[2].context.contains(&w) {
                fresh_for(&w, &d.premises[2].context, &[&u, &s1, &s2])
            } else {
                w
            };
            let scrut = &d.premises[0].conclusion;
            let c1 = contrapose(&x1, &b1.ty, &w, r.mode, s1.clone());
            let c2 = contrapose(&x2, &b2.ty, &w, r.mode, s2.clone());
            let xi = clam_vacuous(g.flip(), cl(&scrut.base, *g), Term::pair(g.flip(), c1, c2));
            let body = Term::case(*g, Term::capp(*g, u, xi), &x1, b1.ty.clone(), s1, &x2, b2.ty.clone(), s2);
            classical_strengthen(&w, &r, body)
        }
        Term::CLam(g, b, _) => {
            let v = opened_name(&d.premises[0]);
            let u = ih(0);
            let body = Term::capp(*g, u, Term::var(&v));
            Term::clam(*g, &v, b.ty.clone(), body)
        }
        Term::CApp(..) => ih(0),
        Term::Bound(_) => unreachable!("derivations never mention dangling indices"),
    }
}

/// The variable a binder premise added to its context.
fn opened_name(premise: &Derivation) -> String {
    premise.context.iter().last().map(|(x, _)| x.to_string()).expect("binder premise extends the context")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_mprop, parse_term, Context};
    use crate::typing::infer_type;

    fn mp(s: &str) -> MProp {
        parse_mprop(s).unwrap()
    }

    fn run(ctx: &[(&str, &str)], term: &str, target: &str) -> Derivation {
        let c = Context::from_entries(ctx.iter().map(|(x, p)| (*x, mp(p)))).unwrap();
        let d = infer_type(&c, &parse_term(term).unwrap()).unwrap();
        let out = project_derivation(&d, target).unwrap();
        assert_eq!(out.conclusion, d.conclusion.truncate());
        assert_eq!(out.context.lookup(target), Some(&d.context.lookup(target).unwrap().truncate()));
        out.validate().unwrap();
        out
    }

    #[test]
    fn axiom_case() {
        let out = run(&[("x", "a^s+")], "x", "x");
        assert_eq!(out.subject, Term::var("x"));
        assert_eq!(out.conclusion, mp("a^c+"));
    }

    #[test]
    fn elimination_cases() {
        run(&[("x", "(a & b)^s+")], "proj1+(x)", "x");
        run(&[("x", "(a | b)^s-")], "proj2-(x)", "x");
        run(&[("x", "~a^s+")], "nege+(x)", "x");
        run(&[("x", "(a | b)^s+"), ("k", "c^s+")], "case+(x, y : a^c+. k, z : b^c+. k)", "x");
        run(&[("x", "(a & b)^s-"), ("k", "c^c-")], "case-(x, y : a^c-. k, z : b^c-. k)", "x");
        run(&[("x", "a^s+"), ("y", "a^s-")], "abs[(b & c)^s+](x, y)", "x");
        run(&[("x", "a^s+")], "clam+(k : a^c-. x)", "x");
        run(&[("x", "a^c+"), ("y", "a^c-")], "capp+(x, y)", "x");
    }

    #[test]
    fn classical_target_only_wraps_conclusion() {
        let out = run(&[("x", "a^c+"), ("y", "b^c+")], "pair+(x, y)", "x");
        assert!(matches!(out.subject, Term::CLam(Sign::Pos, _, _)));
        let c = Context::from_entries([("x", mp("a^c+"))]).unwrap();
        let d = infer_type(&c, &Term::var("x")).unwrap();
        assert_eq!(project_derivation(&d, "x").unwrap().subject, Term::var("x"));
    }

    #[test]
    fn missing_assumption() {
        let c = Context::from_entries([("x", mp("a^c+"))]).unwrap();
        let d = infer_type(&c, &Term::var("x")).unwrap();
        assert!(matches!(project_derivation(&d, "q"), Err(TypeError::NoSuchAssumption(_))));
    }
}
