//! Classical combinators over classical-affirmation terms: the building
//! blocks of the natural-deduction embedding and the derived implication.

use crate::syntax::{fresh_name, Idx, MProp, Mode, Prop, Sign, Term, RESERVED_FALSITY};
use crate::typing::{abs_general, clam_vacuous, contrapose, lem};

const POS: Sign = Sign::Pos;
const NEG: Sign = Sign::Neg;

fn cplus(a: &Prop) -> MProp {
    MProp::new(a.clone(), Mode::CLASSICAL_POS)
}

fn cminus(a: &Prop) -> MProp {
    MProp::new(a.clone(), Mode::CLASSICAL_NEG)
}

/// The falsity formula `_bot0 & ~_bot0`.
pub fn falsity() -> Prop {
    let a = Prop::var(RESERVED_FALSITY);
    Prop::and(a.clone(), Prop::neg(a))
}

/// `a => b`, read as `~a | b`.
pub fn implies(a: &Prop, b: &Prop) -> Prop {
    Prop::or(Prop::neg(a.clone()), b.clone())
}

fn fresh(base: &str, pieces: &[&Term]) -> String {
    fresh_name(base, &|n| pieces.iter().any(|t| t.has_free(n)))
}

/// `pairc(t, s) = clam+(_ : (A & B)^c-. pair+(t, s))`.
pub fn pairc(a: &Prop, b: &Prop, t: Term, s: Term) -> Term {
    clam_vacuous(POS, cminus(&Prop::and(a.clone(), b.clone())), Term::pair(POS, t, s))
}

/// `projic(t) = clam+(x : Ai^c-. capp+(proji+(capp+(t, clam-(_ : (A1 & A2)^c+. ini-(x)))), x))`.
pub fn projic(i: Idx, a1: &Prop, a2: &Prop, t: Term) -> Term {
    let x = fresh("x", &[&t]);
    let whole = Prop::and(a1.clone(), a2.clone());
    let k = clam_vacuous(NEG, cplus(&whole), Term::inj(NEG, i, Term::var(&x)));
    let body = Term::capp(POS, Term::proj(POS, i, Term::capp(POS, t, k)), Term::var(&x));
    Term::clam(POS, &x, cminus(i.pick(a1, a2)), body)
}

/// `inic(t) = clam+(_ : (A1 | A2)^c-. ini+(t))`.
pub fn inic(i: Idx, a1: &Prop, a2: &Prop, t: Term) -> Term {
    clam_vacuous(POS, cminus(&Prop::or(a1.clone(), a2.clone())), Term::inj(POS, i, t))
}

/// Classical case analysis on `t : (A | B)^c+` with branches `x.s` and `x.u` proving `C^c+`.
pub fn casec(a: &Prop, b: &Prop, c: &Prop, t: Term, x: &str, s: Term, u: Term) -> Term {
    let y = fresh_name("y", &|n| n == x || [&t, &s, &u].iter().any(|p| p.has_free(n)));
    let cont_s = contrapose(x, &cplus(a), &y, Mode::CLASSICAL_POS, s.clone());
    let cont_u = contrapose(x, &cplus(b), &y, Mode::CLASSICAL_POS, u.clone());
    let k = clam_vacuous(NEG, cplus(&Prop::or(a.clone(), b.clone())), Term::pair(NEG, cont_s, cont_u));
    let body = Term::case(
        POS,
        Term::capp(POS, t, k),
        x,
        cplus(a),
        Term::capp(POS, s, Term::var(&y)),
        x,
        cplus(b),
        Term::capp(POS, u, Term::var(&y)),
    );
    Term::clam(POS, &y, cminus(c), body)
}

/// Negation introduction from `x : A^c+ |- t : falsity^c+`.
pub fn neglamc(a: &Prop, x: &str, t: Term) -> Term {
    let inner = abs_general(
        MProp::new(a.clone(), Mode::STRONG_NEG),
        Mode::CLASSICAL_POS,
        t,
        lem(&Prop::var(RESERVED_FALSITY), NEG),
    );
    let refute = Term::clam(NEG, x, cplus(a), inner);
    clam_vacuous(POS, cminus(&Prop::neg(a.clone())), Term::negi(POS, refute))
}

/// Negation elimination: `t : (~A)^c+` against `s : A^c+` gives `falsity^c+`.
pub fn negapc(a: &Prop, t: Term, s: Term) -> Term {
    let k = clam_vacuous(NEG, cplus(&Prop::neg(a.clone())), Term::negi(NEG, s));
    abs_general(cplus(&falsity()), Mode::CLASSICAL_POS, t, k)
}

/// Ex falso: `t : falsity^c+` gives `goal`.
pub fn explosion(goal: MProp, t: Term) -> Term {
    abs_general(goal, Mode::CLASSICAL_POS, t, lem(&Prop::var(RESERVED_FALSITY), NEG))
}

/// Excluded middle `(A | ~A)^c+`.
pub fn lemc(a: &Prop) -> Term {
    lem(a, POS)
}

/// `X_y = clam+(z : A^c-. capp+(nege-(capp-(X'_{y,z}, clam+(_ : (~A)^c-. negi+(z)))), z))`.
fn implication_witness(a: &Prop, b: &Prop, y: &str, z: &str) -> Term {
    let na = Prop::neg(a.clone());
    let refute_z = || clam_vacuous(POS, cminus(&na), Term::negi(POS, Term::var(z)));
    let left = clam_vacuous(POS, cminus(&implies(a, b)), Term::inj(POS, Idx::One, refute_z()));
    let x_prime = Term::proj(NEG, Idx::One, Term::capp(NEG, Term::var(y), left));
    let body = Term::capp(POS, Term::nege(NEG, Term::capp(NEG, x_prime, refute_z())), Term::var(z));
    Term::clam(POS, z, cminus(a), body)
}

/// Implication introduction `lamc x.t` from `x : A^c+ |- t : B^c+`.
pub fn lamc(a: &Prop, b: &Prop, x: &str, t: Term) -> Term {
    let y = fresh_name("y", &|n| n == x || t.has_free(n));
    let z = fresh_name("z", &|n| n == x || n == y || t.has_free(n));
    let body = t.substitute(x, &implication_witness(a, b, &y, &z));
    Term::clam(POS, &y, cminus(&implies(a, b)), Term::inj(POS, Idx::Two, body))
}

/// Implication elimination `appc(t, s)` for `t : (A => B)^c+` and `s : A^c+`.
pub fn appc(a: &Prop, b: &Prop, t: Term, s: Term) -> Term {
    let na = Prop::neg(a.clone());
    let x = fresh("x", &[&t, &s]);
    let (y, z) = (fresh_name("y", &|n| n == x || s.has_free(n)), fresh_name("z", &|n| n == x));
    let refute_s = || clam_vacuous(NEG, cplus(&na), Term::negi(NEG, s.clone()));
    let k = clam_vacuous(NEG, cplus(&implies(a, b)), Term::pair(NEG, refute_s(), Term::var(&x)));
    let left = abs_general(
        MProp::new(b.clone(), Mode::STRONG_POS),
        Mode::CLASSICAL_POS,
        s.clone(),
        Term::nege(POS, Term::capp(POS, Term::var(&y), refute_s())),
    );
    let right = Term::capp(POS, Term::var(&z), Term::var(&x));
    let body = Term::case(POS, Term::capp(POS, t, k), &y, cplus(&na), left, &z, cplus(b), right);
    Term::clam(POS, &x, cminus(b), body)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_pure, Context};
    use crate::typing::check_type;

    fn p(s: &str) -> Prop {
        parse_pure(s).unwrap()
    }

    fn ctx(entries: &[(&str, MProp)]) -> Context {
        Context::from_entries(entries.iter().cloned()).unwrap()
    }

    #[test]
    fn conjunction_and_disjunction() {
        let (a, b) = (p("a"), p("b"));
        let c = ctx(&[("t", cplus(&a)), ("s", cplus(&b))]);
        let pr = pairc(&a, &b, Term::var("t"), Term::var("s"));
        check_type(&c, &pr, &cplus(&Prop::and(a.clone(), b.clone()))).unwrap();
        check_type(&c, &projic(Idx::Two, &a, &b, pr), &cplus(&b)).unwrap();
        let inj = inic(Idx::One, &a, &b, Term::var("t"));
        check_type(&c, &inj, &cplus(&Prop::or(a.clone(), b.clone()))).unwrap();
        let c2 = c.extended("k", cplus(&p("c"))).unwrap();
        let cs = casec(&a, &b, &p("c"), inj, "x", Term::var("k"), Term::var("k"));
        check_type(&c2, &cs, &cplus(&p("c"))).unwrap();
    }

    #[test]
    fn negation_and_explosion() {
        let a = p("a");
        let c = ctx(&[("f", cplus(&falsity())), ("s", cplus(&a))]);
        let n = neglamc(&a, "x", Term::var("f"));
        check_type(&c, &n, &cplus(&Prop::neg(a.clone()))).unwrap();
        check_type(&c, &negapc(&a, n, Term::var("s")), &cplus(&falsity())).unwrap();
        check_type(&c, &explosion(cplus(&p("q")), Term::var("f")), &cplus(&p("q"))).unwrap();
    }

    #[test]
    fn implication() {
        let (a, b) = (p("a"), p("(b & c)"));
        let c = ctx(&[("k", cplus(&b)), ("s", cplus(&a))]);
        let l = lamc(&a, &b, "x", Term::var("k"));
        check_type(&c, &l, &cplus(&implies(&a, &b))).unwrap();
        check_type(&c, &appc(&a, &b, l, Term::var("s")), &cplus(&b)).unwrap();
        // the abstracted variable itself
        let id = lamc(&a, &a, "x", Term::var("x"));
        check_type(&Context::new(), &id, &cplus(&implies(&a, &a))).unwrap();
    }
}
