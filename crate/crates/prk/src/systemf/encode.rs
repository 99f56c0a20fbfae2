//! The standard System F encodings of the empty, unit, product and sum types.
//!
//! Each constructor elaborates to raw syntax immediately, so reduction
//! counts are raw beta steps.

use std::sync::Arc;

use super::fterm::FTerm;
use super::ftype::FType;
use crate::syntax::{Hint, Idx, Name};

fn hint(s: &str) -> Hint {
    Hint(Name::from(s))
}

fn forall(h: &str, body: FType) -> FType {
    FType::Forall(hint(h), Arc::new(body))
}

/// `0 = forall r. r`
pub fn zero() -> FType {
    forall("r", FType::Bound(0))
}

/// `1 = forall r. r -> r`
pub fn one() -> FType {
    forall("r", FType::arrow(FType::Bound(0), FType::Bound(0)))
}

/// `A * B = forall r. (A -> B -> r) -> r`
pub fn times(a: &FType, b: &FType) -> FType {
    let (a, b) = (a.shift(1, 0), b.shift(1, 0));
    let r = || FType::Bound(0);
    forall("r", FType::arrow(FType::arrow(a, FType::arrow(b, r())), r()))
}

/// `A + B = forall r. (A -> r) -> (B -> r) -> r`
pub fn plus(a: &FType, b: &FType) -> FType {
    let (a, b) = (a.shift(1, 0), b.shift(1, 0));
    let r = || FType::Bound(0);
    forall("r", FType::arrow(FType::arrow(a, r()), FType::arrow(FType::arrow(b, r()), r())))
}

/// `A -> 0`
pub fn not(a: &FType) -> FType {
    FType::arrow(a.clone(), zero())
}

/// `triv = tfun r -> fun (x : r) -> x`
pub fn triv() -> FTerm {
    FTerm::TyLam(hint("r"), Arc::new(FTerm::Lam(hint("x"), FType::Bound(0), Arc::new(FTerm::Bound(0)))))
}

/// `abort_A(t) = t [A]` for `t : 0`.
pub fn abort(a: &FType, t: FTerm) -> FTerm {
    FTerm::tyapp(t, a.clone())
}

/// Lift a term under one type binder and `n` term binders.
fn lift(t: &FTerm, n: usize) -> FTerm {
    t.shift_types(1, 0).shift(n as isize, 0)
}

/// `<t, s> = tfun r -> fun (f : A -> B -> r) -> f t s`
pub fn pair(a: &FType, b: &FType, t: &FTerm, s: &FTerm) -> FTerm {
    let fty = FType::arrow(a.shift(1, 0), FType::arrow(b.shift(1, 0), FType::Bound(0)));
    let body = FTerm::apps(FTerm::Bound(0), [lift(t, 1), lift(s, 1)]);
    FTerm::TyLam(hint("r"), Arc::new(FTerm::Lam(hint("f"), fty, Arc::new(body))))
}

/// `proj_i(t) = t [A_i] (fun (x1 : A1) -> fun (x2 : A2) -> x_i)`
pub fn proj(i: Idx, a1: &FType, a2: &FType, t: FTerm) -> FTerm {
    let pick = FTerm::Bound(i.pick(1, 0));
    let sel = FTerm::Lam(hint("x1"), a1.clone(), Arc::new(FTerm::Lam(hint("x2"), a2.clone(), Arc::new(pick))));
    FTerm::app(FTerm::tyapp(t, i.pick(a1, a2).clone()), sel)
}

/// `in_i(t) = tfun r -> fun (f1 : A1 -> r) -> fun (f2 : A2 -> r) -> f_i t`
pub fn inj(i: Idx, a1: &FType, a2: &FType, t: &FTerm) -> FTerm {
    let f = |a: &FType| FType::arrow(a.shift(1, 0), FType::Bound(0));
    let body = FTerm::app(FTerm::Bound(i.pick(1, 0)), lift(t, 2));
    let inner = FTerm::Lam(hint("f2"), f(a2), Arc::new(body));
    FTerm::TyLam(hint("r"), Arc::new(FTerm::Lam(hint("f1"), f(a1), Arc::new(inner))))
}

/// `case t of x. s1 | y. s2 = t [B] (fun (x : A1) -> s1) (fun (y : A2) -> s2)`
///
/// `s1` and `s2` mention `x` and `y` as free variables.
#[allow(clippy::too_many_arguments)]
pub fn case(t: FTerm, result: &FType, x: &str, a1: &FType, s1: FTerm, y: &str, a2: &FType, s2: FTerm) -> FTerm {
    FTerm::apps(FTerm::tyapp(t, result.clone()), [FTerm::lam(x, a1.clone(), s1), FTerm::lam(y, a2.clone(), s2)])
}
