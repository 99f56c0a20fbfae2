//! Terms witnessing the admissible rules: generalized absurdity,
//! contraposition, excluded middle and non-contradiction, projection of
//! conclusions and classical strengthening.

use crate::syntax::{fresh_name, Context, MProp, Mode, Prop, Sign, Term};

use super::{clam_vacuous, infer_type, needs_expected, type_of, TypeError};

/// Generalized absurdity `abs'{q}(t, s)` where `t` has a proposition of mode `p`.
pub fn abs_general(q: MProp, p: Mode, t: Term, s: Term) -> Term {
    if p.is_strong() {
        return Term::abs(q, t, s);
    }
    let g = p.sign;
    Term::abs(q, Term::capp(g, t.clone(), s.clone()), Term::capp(g.flip(), s, t))
}

/// Build `abs'{q}(t, s)` after checking that the two sides have opposite types.
pub fn mk_abs_general(ctx: &Context, q: MProp, t: Term, s: Term) -> Result<Term, TypeError> {
    let p =
        if needs_expected(&t) { infer_type(ctx, &s)?.conclusion.opposite() } else { infer_type(ctx, &t)?.conclusion };
    type_of(ctx, &t, Some(&p))?;
    if type_of(ctx, &s, Some(&p.opposite())).is_err() {
        let right = infer_type(ctx, &s)?.conclusion;
        return Err(TypeError::TypesNotOpposite { left: p, right });
    }
    Ok(abs_general(q, p.mode, t, s))
}

/// `contrapose_{x,y}(t)`: from `x : p` proving `t : q`, a term of `p~` under `y : q~`.
pub fn contrapose(x: &str, p: &MProp, y: &str, q_mode: Mode, t: Term) -> Term {
    let g = p.sign();
    let goal = MProp::new(p.base.clone(), Mode::strong(g.flip()));
    let body = abs_general(goal, q_mode, t, Term::var(y));
    Term::clam(g.flip(), x, p.clone(), body)
}

/// Contraposition on a term typed under `ctx`, where `x` is a classical assumption of `ctx`.
pub fn mk_contrapose(ctx: &Context, x: &str, y: &str, t: &Term) -> Result<Term, TypeError> {
    let p = ctx.lookup(x).cloned().ok_or_else(|| TypeError::NoSuchAssumption(x.into()))?;
    if !p.is_classical() {
        return Err(TypeError::NotClassical(p));
    }
    let q = infer_type(ctx, t)?.conclusion;
    Ok(contrapose(x, &p, y, q.mode, t.clone()))
}

/// Wrap a term of strong `q` into its classical projection; identity on classical `q`.
pub fn project_conclusion(t: Term, q: &MProp) -> Term {
    if q.is_classical() {
        return t;
    }
    clam_vacuous(q.sign(), q.truncate().opposite(), t)
}

/// From `w : p~ ⊢ u : p` with `p` classical, a term of `p` without `w`.
pub fn classical_strengthen(w: &str, p: &MProp, u: Term) -> Term {
    let g = p.sign();
    Term::clam(g, w, p.opposite(), Term::capp(g, u, Term::var(w)))
}

/// `lemP(a)` for `Sign::Pos`, `lemN(a)` for `Sign::Neg`.
pub fn lem(a: &Prop, sign: Sign) -> Term {
    let g = sign;
    let join = |l: Prop, r: Prop| if g == Sign::Pos { Prop::or(l, r) } else { Prop::and(l, r) };
    let na = Prop::neg(a.clone());
    let whole = join(a.clone(), na.clone());
    let cl = |p: &Prop, s: Sign| MProp::new(p.clone(), Mode::classical(s));
    let (x, y, z) = ("x", "y", "z");
    // lemPinner_y
    let refute = clam_vacuous(g, cl(&na, g.flip()), Term::negi(g, Term::var(z)));
    let goal = MProp::new(a.clone(), Mode::strong(g));
    let inner_abs = abs_general(goal, Mode::classical(g.flip()), Term::var(y), refute);
    let inner = clam_vacuous(
        g,
        cl(&whole, g.flip()),
        Term::inj(g, crate::syntax::Idx::One, Term::clam(g, z, cl(a, g.flip()), inner_abs)),
    );
    let body = Term::negi(g, Term::proj(g.flip(), crate::syntax::Idx::One, Term::capp(g.flip(), Term::var(x), inner)));
    let right = Term::clam(g, y, cl(&na, g.flip()), body);
    Term::clam(g, x, cl(&whole, g.flip()), Term::inj(g, crate::syntax::Idx::Two, right))
}

/// The closed excluded-middle term for `+` and non-contradiction term for `-`.
pub fn mk_lem(a: &Prop, sign: Sign) -> Term {
    lem(a, sign)
}

/// A name not free in any of `terms` and not declared in `ctx`.
pub(crate) fn fresh_for(base: &str, ctx: &Context, terms: &[&Term]) -> String {
    fresh_name(base, &|n| ctx.contains(n) || terms.iter().any(|t| t.has_free(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_mprop, parse_pure};
    use crate::typing::check_type;

    fn mp(s: &str) -> MProp {
        parse_mprop(s).unwrap()
    }

    #[test]
    fn lem_types() {
        for a in ["a", "(a & ~b)", "~(a | b)"] {
            let a = parse_pure(a).unwrap();
            let p = MProp::new(Prop::or(a.clone(), Prop::neg(a.clone())), Mode::CLASSICAL_POS);
            let d = infer_type(&Context::new(), &mk_lem(&a, Sign::Pos)).unwrap();
            assert_eq!(d.conclusion, p);
            d.validate().unwrap();
            let n = MProp::new(Prop::and(a.clone(), Prop::neg(a.clone())), Mode::CLASSICAL_NEG);
            assert_eq!(infer_type(&Context::new(), &mk_lem(&a, Sign::Neg)).unwrap().conclusion, n);
        }
    }

    #[test]
    fn lem_duality() {
        let a = parse_pure("(a & b)").unwrap();
        assert_eq!(mk_lem(&a, Sign::Pos).dual(), mk_lem(&a.dual(), Sign::Neg));
        let d = infer_type(&Context::new(), &mk_lem(&a, Sign::Pos).dual()).unwrap();
        assert_eq!(d.conclusion, infer_type(&Context::new(), &mk_lem(&a, Sign::Pos)).unwrap().conclusion.dual());
    }

    #[test]
    fn abs_general_cases() {
        let ctx = Context::from_entries([("t", mp("a^s+")), ("s", mp("a^s-"))]).unwrap();
        let q = mp("b^c-");
        let r = mk_abs_general(&ctx, q.clone(), Term::var("t"), Term::var("s")).unwrap();
        assert_eq!(r, Term::abs(q.clone(), Term::var("t"), Term::var("s")));

        let ctx = Context::from_entries([("t", mp("a^c+")), ("s", mp("a^c-"))]).unwrap();
        let r = mk_abs_general(&ctx, q.clone(), Term::var("t"), Term::var("s")).unwrap();
        let (t, s) = (Term::var("t"), Term::var("s"));
        assert_eq!(r, Term::abs(q.clone(), Term::capp(Sign::Pos, t.clone(), s.clone()), Term::capp(Sign::Neg, s, t)));
        assert_eq!(infer_type(&ctx, &r).unwrap().conclusion, q);

        let bad = mk_abs_general(&ctx, q, Term::var("t"), Term::var("t")).unwrap_err();
        assert!(matches!(bad, TypeError::TypesNotOpposite { .. }));
    }

    #[test]
    fn contrapose_types() {
        for (p, q) in [("a^c+", "b^s+"), ("a^c-", "b^c+"), ("a^c+", "b^c-")] {
            let ctx = Context::from_entries([("x", mp(p)), ("t", mp(q))]).unwrap();
            let r = mk_contrapose(&ctx, "x", "y", &Term::var("t")).unwrap();
            let out = ctx.without("x").extended("y", mp(q).opposite()).unwrap();
            check_type(&out, &r, &mp(p).opposite()).unwrap();
        }
        let ctx = Context::from_entries([("x", mp("a^s+"))]).unwrap();
        assert!(matches!(mk_contrapose(&ctx, "x", "y", &Term::var("x")), Err(TypeError::NotClassical(_))));
    }

    #[test]
    fn contrapose_matches_displayed_form() {
        let ctx = Context::from_entries([("x", mp("a^c+")), ("t", mp("b^s+"))]).unwrap();
        let r = mk_contrapose(&ctx, "x", "y", &Term::var("t")).unwrap();
        let expected = Term::clam(Sign::Neg, "x", mp("a^c+"), Term::abs(mp("a^s-"), Term::var("t"), Term::var("y")));
        assert_eq!(r, expected);
    }
}
