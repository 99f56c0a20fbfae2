//! Types of System F with the recursive constraints
//! `Pos<A,B> ≡ Neg<A,B> -> A` and `Neg<A,B> ≡ Pos<A,B> -> B`.
//!
//! Free type variables are named; `forall` binds a de Bruijn index.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use crate::syntax::{Hint, Name};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum FType {
    Var(Name),
    Bound(usize),
    Pos(Arc<FType>, Arc<FType>),
    Neg(Arc<FType>, Arc<FType>),
    Arrow(Arc<FType>, Arc<FType>),
    Forall(Hint, Arc<FType>),
}

impl FType {
    pub fn var(name: &str) -> FType {
        FType::Var(Name::from(name))
    }

    pub fn pos(a: FType, b: FType) -> FType {
        FType::Pos(Arc::new(a), Arc::new(b))
    }

    pub fn neg(a: FType, b: FType) -> FType {
        FType::Neg(Arc::new(a), Arc::new(b))
    }

    pub fn arrow(a: FType, b: FType) -> FType {
        FType::Arrow(Arc::new(a), Arc::new(b))
    }

    /// `forall name. body`, binding the free occurrences of `name`.
    pub fn forall(name: &str, body: FType) -> FType {
        FType::Forall(Hint(Name::from(name)), Arc::new(body.close(name)))
    }

    /// Map de Bruijn indices, given the number of binders crossed.
    fn map_bound(&self, depth: usize, f: &impl Fn(usize, usize) -> FType) -> FType {
        match self {
            FType::Var(_) => self.clone(),
            FType::Bound(i) => f(*i, depth),
            FType::Pos(a, b) => FType::pos(a.map_bound(depth, f), b.map_bound(depth, f)),
            FType::Neg(a, b) => FType::neg(a.map_bound(depth, f), b.map_bound(depth, f)),
            FType::Arrow(a, b) => FType::arrow(a.map_bound(depth, f), b.map_bound(depth, f)),
            FType::Forall(h, body) => FType::Forall(h.clone(), Arc::new(body.map_bound(depth + 1, f))),
        }
    }

    /// Add `d` to every index at or above `cutoff`.
    pub fn shift(&self, d: isize, cutoff: usize) -> FType {
        if d == 0 {
            return self.clone();
        }
        self.map_bound(cutoff, &|i, c| {
            if i >= c {
                FType::Bound((i as isize + d) as usize)
            } else {
                FType::Bound(i)
            }
        })
    }

    /// Replace index `k` by `s` (shifted under binders); indices above `k` drop by one.
    pub fn subst_index(&self, k: usize, s: &FType) -> FType {
        self.map_bound(k, &|i, c| {
            if i == c {
                s.shift((c - k) as isize, 0)
            } else if i > c {
                FType::Bound(i - 1)
            } else {
                FType::Bound(i)
            }
        })
    }

    /// The body of a `forall` with its bound variable replaced by `s`.
    pub fn instantiate(&self, s: &FType) -> FType {
        self.subst_index(0, s)
    }

    pub fn open(&self, x: &str) -> FType {
        self.instantiate(&FType::var(x))
    }

    /// Abstract the free variable `x` into index 0, shifting existing indices.
    pub fn close(&self, x: &str) -> FType {
        self.close_at(x, 0)
    }

    pub(crate) fn close_at(&self, x: &str, k: usize) -> FType {
        match self {
            FType::Var(y) if &**y == x => FType::Bound(k),
            FType::Var(_) => self.clone(),
            FType::Bound(i) if *i >= k => FType::Bound(i + 1),
            FType::Bound(_) => self.clone(),
            FType::Pos(a, b) => FType::pos(a.close_at(x, k), b.close_at(x, k)),
            FType::Neg(a, b) => FType::neg(a.close_at(x, k), b.close_at(x, k)),
            FType::Arrow(a, b) => FType::arrow(a.close_at(x, k), b.close_at(x, k)),
            FType::Forall(h, body) => FType::Forall(h.clone(), Arc::new(body.close_at(x, k + 1))),
        }
    }

    pub fn mentions_index(&self, k: usize) -> bool {
        match self {
            FType::Var(_) => false,
            FType::Bound(i) => *i == k,
            FType::Pos(a, b) | FType::Neg(a, b) | FType::Arrow(a, b) => a.mentions_index(k) || b.mentions_index(k),
            FType::Forall(_, body) => body.mentions_index(k + 1),
        }
    }

    pub fn free_vars(&self) -> BTreeSet<Name> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut out);
        out
    }

    fn collect_free(&self, out: &mut BTreeSet<Name>) {
        match self {
            FType::Var(x) => {
                out.insert(x.clone());
            }
            FType::Bound(_) => {}
            FType::Pos(a, b) | FType::Neg(a, b) | FType::Arrow(a, b) => {
                a.collect_free(out);
                b.collect_free(out);
            }
            FType::Forall(_, body) => body.collect_free(out),
        }
    }

    pub fn has_free(&self, x: &str) -> bool {
        match self {
            FType::Var(y) => &**y == x,
            FType::Bound(_) => false,
            FType::Pos(a, b) | FType::Neg(a, b) | FType::Arrow(a, b) => a.has_free(x) || b.has_free(x),
            FType::Forall(_, body) => body.has_free(x),
        }
    }

    /// Substitute `s` for the free variable `x`.
    pub fn substitute(&self, x: &str, s: &FType) -> FType {
        self.close(x).instantiate(s)
    }

    pub fn size(&self) -> usize {
        match self {
            FType::Var(_) | FType::Bound(_) => 1,
            FType::Pos(a, b) | FType::Neg(a, b) | FType::Arrow(a, b) => 1 + a.size() + b.size(),
            FType::Forall(_, body) => 1 + body.size(),
        }
    }

    /// One unfolding of a constraint variable; `None` for other types.
    pub fn unfold(&self) -> Option<FType> {
        match self {
            FType::Pos(a, b) => Some(FType::arrow(FType::Neg(a.clone(), b.clone()), (**a).clone())),
            FType::Neg(a, b) => Some(FType::arrow(FType::Pos(a.clone(), b.clone()), (**b).clone())),
            _ => None,
        }
    }

    /// Every type obtained by unfolding exactly one occurrence of a constraint variable.
    pub fn single_unfoldings(&self) -> Vec<FType> {
        let mut out: Vec<FType> = self.unfold().into_iter().collect();
        let rebuild2 = |a: &Arc<FType>, b: &Arc<FType>, mk: fn(FType, FType) -> FType, out: &mut Vec<FType>| {
            for a2 in a.single_unfoldings() {
                out.push(mk(a2, (**b).clone()));
            }
            for b2 in b.single_unfoldings() {
                out.push(mk((**a).clone(), b2));
            }
        };
        match self {
            FType::Var(_) | FType::Bound(_) => {}
            FType::Pos(a, b) => rebuild2(a, b, FType::pos, &mut out),
            FType::Neg(a, b) => rebuild2(a, b, FType::neg, &mut out),
            FType::Arrow(a, b) => rebuild2(a, b, FType::arrow, &mut out),
            FType::Forall(h, body) => {
                out.extend(body.single_unfoldings().into_iter().map(|b| FType::Forall(h.clone(), Arc::new(b))))
            }
        }
        out
    }

    /// All types reachable by at most `rounds` single unfoldings, including `self`.
    pub fn unfoldings(&self, rounds: usize) -> Vec<FType> {
        let mut seen: HashSet<FType> = HashSet::from([self.clone()]);
        let mut frontier = vec![self.clone()];
        for _ in 0..rounds {
            let mut next = Vec::new();
            for t in &frontier {
                for u in t.single_unfoldings() {
                    if seen.insert(u.clone()) {
                        next.push(u);
                    }
                }
            }
            frontier = next;
        }
        let mut out: Vec<FType> = seen.into_iter().collect();
        out.sort_by_key(FType::size);
        out
    }
}

/// Decide `a ≡ b` in the congruence generated by the constraints.
///
/// Constraint variables are unfolded on demand and pairs already under
/// comparison are assumed equal, which is sound because every right-hand
/// side is an arrow.
pub fn ftype_equiv(a: &FType, b: &FType) -> bool {
    let mut assumed = HashSet::new();
    equiv(a, b, &mut assumed)
}

fn equiv(a: &FType, b: &FType, assumed: &mut HashSet<(FType, FType)>) -> bool {
    if a == b {
        return true;
    }
    let constrained = |t: &FType| matches!(t, FType::Pos(..) | FType::Neg(..));
    if constrained(a) || constrained(b) {
        if !assumed.insert((a.clone(), b.clone())) {
            return true;
        }
        let a2 = a.unfold().unwrap_or_else(|| a.clone());
        let b2 = b.unfold().unwrap_or_else(|| b.clone());
        return equiv(&a2, &b2, assumed);
    }
    match (a, b) {
        (FType::Arrow(a1, a2), FType::Arrow(b1, b2)) => equiv(a1, b1, assumed) && equiv(a2, b2, assumed),
        (FType::Forall(_, x), FType::Forall(_, y)) => equiv(x, y, assumed),
        _ => false,
    }
}

/// Polarity data of a type. Constraint variables count as type variables.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polarity {
    pub pos: BTreeSet<VarKey>,
    pub neg: BTreeSet<VarKey>,
    pub wpos: BTreeSet<VarKey>,
    pub wneg: BTreeSet<VarKey>,
    pub compl: usize,
}

/// A type variable in the polarity sets: a named variable or a constraint variable.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum VarKey {
    Plain(Name),
    Pos(String),
    Neg(String),
}

impl VarKey {
    /// The key of a variable-like type; `None` for arrows and quantifiers.
    pub fn of(t: &FType) -> Option<VarKey> {
        match t {
            FType::Var(x) => Some(VarKey::Plain(x.clone())),
            FType::Pos(..) => Some(VarKey::Pos(t.debruijn())),
            FType::Neg(..) => Some(VarKey::Neg(t.debruijn())),
            _ => None,
        }
    }
}

fn opened(body: &FType) -> (FType, Name) {
    let x = crate::syntax::fresh_name("%t", &|n| body.has_free(n));
    (body.open(&x), Name::from(x.as_str()))
}

pub fn posvars(t: &FType) -> BTreeSet<VarKey> {
    polar(t, true)
}

pub fn negvars(t: &FType) -> BTreeSet<VarKey> {
    polar(t, false)
}

fn polar(t: &FType, positive: bool) -> BTreeSet<VarKey> {
    match t {
        FType::Var(_) | FType::Pos(..) | FType::Neg(..) => {
            if positive {
                BTreeSet::from([VarKey::of(t).expect("variable-like")])
            } else {
                BTreeSet::new()
            }
        }
        FType::Bound(_) => BTreeSet::new(),
        FType::Arrow(a, b) => {
            let mut s = polar(a, !positive);
            s.extend(polar(b, positive));
            s
        }
        FType::Forall(_, body) => {
            let (b, x) = opened(body);
            let mut s = polar(&b, positive);
            s.remove(&VarKey::Plain(x));
            s
        }
    }
}

pub fn wposvars(t: &FType) -> BTreeSet<VarKey> {
    weak(t, true)
}

pub fn wnegvars(t: &FType) -> BTreeSet<VarKey> {
    weak(t, false)
}

fn weak(t: &FType, positive: bool) -> BTreeSet<VarKey> {
    match t {
        FType::Var(_) => {
            if positive {
                BTreeSet::from([VarKey::of(t).expect("variable")])
            } else {
                BTreeSet::new()
            }
        }
        FType::Bound(_) => BTreeSet::new(),
        FType::Pos(a, b) => {
            let mut s = if positive { BTreeSet::from([VarKey::of(t).expect("variable")]) } else { BTreeSet::new() };
            s.extend(weak(a, positive));
            s.extend(weak(b, !positive));
            s
        }
        FType::Neg(a, b) => {
            let mut s = if positive { BTreeSet::from([VarKey::of(t).expect("variable")]) } else { BTreeSet::new() };
            s.extend(weak(a, !positive));
            s.extend(weak(b, positive));
            s
        }
        FType::Arrow(a, b) => {
            let mut s = weak(a, !positive);
            s.extend(weak(b, positive));
            s
        }
        FType::Forall(_, body) => {
            let (b, x) = opened(body);
            let mut s = weak(&b, positive);
            s.remove(&VarKey::Plain(x));
            s
        }
    }
}

/// Complexity used by the positivity argument.
pub fn compl(t: &FType) -> usize {
    match t {
        FType::Var(_) | FType::Bound(_) => 1,
        FType::Pos(a, b) | FType::Neg(a, b) | FType::Arrow(a, b) => 1 + compl(a) + compl(b),
        FType::Forall(_, body) => 1 + compl(body),
    }
}

pub fn polarity(t: &FType) -> Polarity {
    Polarity { pos: posvars(t), neg: negvars(t), wpos: wposvars(t), wneg: wnegvars(t), compl: compl(t) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> FType {
        FType::var("a")
    }

    fn b() -> FType {
        FType::var("b")
    }

    #[test]
    fn constraint_equations_hold() {
        let p = FType::pos(a(), b());
        assert!(ftype_equiv(&p, &FType::arrow(FType::neg(a(), b()), a())));
        assert!(ftype_equiv(&p, &p));
        assert!(!ftype_equiv(&p, &FType::arrow(a(), a())));
        let deep = FType::arrow(FType::arrow(p.clone(), b()), a());
        assert!(ftype_equiv(&FType::pos(a(), b()), &deep));
    }

    #[test]
    fn forall_is_alpha_invariant() {
        let t1 = FType::forall("x", FType::arrow(FType::var("x"), FType::var("x")));
        let t2 = FType::forall("y", FType::arrow(FType::var("y"), FType::var("y")));
        assert_eq!(t1, t2);
        assert!(!ftype_equiv(&t1, &FType::forall("y", FType::arrow(FType::var("y"), a()))));
    }

    #[test]
    fn polarity_examples() {
        assert_eq!(posvars(&a()), BTreeSet::from([VarKey::Plain("a".into())]));
        assert!(negvars(&a()).is_empty());
        assert_eq!(negvars(&FType::arrow(a(), b())), BTreeSet::from([VarKey::Plain("a".into())]));
        let t = FType::forall("x", FType::arrow(FType::var("x"), a()));
        assert!(negvars(&t).is_empty());
    }

    #[test]
    fn instantiate_shifts_under_binders() {
        // forall y. (#1 -> y) with #1 := forall z. z
        let body = FType::Forall(Hint("y".into()), Arc::new(FType::arrow(FType::Bound(1), FType::Bound(0))));
        let zero = FType::forall("z", FType::var("z"));
        let r = body.instantiate(&zero);
        assert_eq!(r, FType::forall("y", FType::arrow(zero.clone(), FType::var("y"))));
    }

    #[test]
    fn unfoldings_reach_depth() {
        let p = FType::pos(a(), b());
        let us = p.unfoldings(2);
        assert!(us.contains(&FType::arrow(FType::arrow(p.clone(), b()), a())));
    }
}
