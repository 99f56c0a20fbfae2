//! Terms of System F, their substitution operations and beta reduction.
//!
//! Term variables and type variables live in separate de Bruijn spaces:
//! `Lam` binds a term index, `TyLam` binds a type index.

use std::collections::BTreeSet;
use std::sync::Arc;

use thiserror::Error;

use super::ftype::FType;
use crate::syntax::{Hint, Name};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum FTerm {
    Var(Name),
    Bound(usize),
    Lam(Hint, FType, Arc<FTerm>),
    App(Arc<FTerm>, Arc<FTerm>),
    TyLam(Hint, Arc<FTerm>),
    TyApp(Arc<FTerm>, FType),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("no normal form within {steps} steps")]
pub struct FuelExhausted {
    pub steps: usize,
    pub last: FTerm,
}

impl FTerm {
    pub fn var(name: &str) -> FTerm {
        FTerm::Var(Name::from(name))
    }

    /// `fun (x : ty) -> body`, binding the free occurrences of `x`.
    pub fn lam(x: &str, ty: FType, body: FTerm) -> FTerm {
        FTerm::Lam(Hint(Name::from(x)), ty, Arc::new(body.close(x)))
    }

    pub fn app(f: FTerm, a: FTerm) -> FTerm {
        FTerm::App(Arc::new(f), Arc::new(a))
    }

    /// Left-nested application `f a1 a2 ...`.
    pub fn apps(f: FTerm, args: impl IntoIterator<Item = FTerm>) -> FTerm {
        args.into_iter().fold(f, FTerm::app)
    }

    /// `tfun a -> body`, binding the free type variable `a` of `body`.
    pub fn tylam(a: &str, body: FTerm) -> FTerm {
        FTerm::TyLam(Hint(Name::from(a)), Arc::new(body.close_type(a)))
    }

    pub fn tyapp(t: FTerm, ty: FType) -> FTerm {
        FTerm::TyApp(Arc::new(t), ty)
    }

    pub fn size(&self) -> usize {
        match self {
            FTerm::Var(_) | FTerm::Bound(_) => 1,
            FTerm::Lam(_, _, b) | FTerm::TyLam(_, b) | FTerm::TyApp(b, _) => 1 + b.size(),
            FTerm::App(f, a) => 1 + f.size() + a.size(),
        }
    }

    /// Generic traversal over term indices and type indices.
    ///
    /// `on_var(i, term_depth, type_depth)` rewrites term indices and
    /// `on_ty(ty, type_depth)` rewrites type annotations.
    fn traverse(
        &self,
        td: usize,
        yd: usize,
        on_var: &impl Fn(usize, usize, usize) -> FTerm,
        on_ty: &impl Fn(&FType, usize) -> FType,
    ) -> FTerm {
        match self {
            FTerm::Var(_) => self.clone(),
            FTerm::Bound(i) => on_var(*i, td, yd),
            FTerm::Lam(h, ty, b) => {
                FTerm::Lam(h.clone(), on_ty(ty, yd), Arc::new(b.traverse(td + 1, yd, on_var, on_ty)))
            }
            FTerm::App(f, a) => {
                FTerm::App(Arc::new(f.traverse(td, yd, on_var, on_ty)), Arc::new(a.traverse(td, yd, on_var, on_ty)))
            }
            FTerm::TyLam(h, b) => FTerm::TyLam(h.clone(), Arc::new(b.traverse(td, yd + 1, on_var, on_ty))),
            FTerm::TyApp(t, ty) => FTerm::TyApp(Arc::new(t.traverse(td, yd, on_var, on_ty)), on_ty(ty, yd)),
        }
    }

    /// Shift term indices at or above `cutoff` by `d`.
    pub fn shift(&self, d: isize, cutoff: usize) -> FTerm {
        if d == 0 {
            return self.clone();
        }
        self.traverse(
            cutoff,
            0,
            &|i, c, _| if i >= c { FTerm::Bound((i as isize + d) as usize) } else { FTerm::Bound(i) },
            &|ty, _| ty.clone(),
        )
    }

    /// Shift type indices at or above `cutoff` by `d`.
    pub fn shift_types(&self, d: isize, cutoff: usize) -> FTerm {
        if d == 0 {
            return self.clone();
        }
        self.traverse(0, cutoff, &|i, _, _| FTerm::Bound(i), &|ty, c| ty.shift(d, c))
    }

    /// Replace term index `k` by `s`; indices above `k` drop by one.
    pub fn subst_index(&self, k: usize, s: &FTerm) -> FTerm {
        self.traverse(
            k,
            0,
            &|i, c, yd| {
                if i == c {
                    s.shift((c - k) as isize, 0).shift_types(yd as isize, 0)
                } else if i > c {
                    FTerm::Bound(i - 1)
                } else {
                    FTerm::Bound(i)
                }
            },
            &|ty, _| ty.clone(),
        )
    }

    /// Replace type index `k` by `a`; type indices above `k` drop by one.
    pub fn subst_type_index(&self, k: usize, a: &FType) -> FTerm {
        self.traverse(0, k, &|i, _, _| FTerm::Bound(i), &|ty, c| ty.subst_index(c, &a.shift((c - k) as isize, 0)))
    }

    pub fn instantiate(&self, s: &FTerm) -> FTerm {
        self.subst_index(0, s)
    }

    pub fn instantiate_type(&self, a: &FType) -> FTerm {
        self.subst_type_index(0, a)
    }

    pub fn open(&self, x: &str) -> FTerm {
        self.instantiate(&FTerm::var(x))
    }

    pub fn open_type(&self, a: &str) -> FTerm {
        self.instantiate_type(&FType::var(a))
    }

    /// Abstract the free term variable `x` into index 0.
    pub fn close(&self, x: &str) -> FTerm {
        self.close_at(x, 0)
    }

    fn close_at(&self, x: &str, k: usize) -> FTerm {
        match self {
            FTerm::Var(y) if &**y == x => FTerm::Bound(k),
            FTerm::Var(_) => self.clone(),
            FTerm::Bound(i) if *i >= k => FTerm::Bound(i + 1),
            FTerm::Bound(_) => self.clone(),
            FTerm::Lam(h, ty, b) => FTerm::Lam(h.clone(), ty.clone(), Arc::new(b.close_at(x, k + 1))),
            FTerm::App(f, a) => FTerm::app(f.close_at(x, k), a.close_at(x, k)),
            FTerm::TyLam(h, b) => FTerm::TyLam(h.clone(), Arc::new(b.close_at(x, k))),
            FTerm::TyApp(t, ty) => FTerm::tyapp(t.close_at(x, k), ty.clone()),
        }
    }

    /// Abstract the free type variable `a` into type index 0.
    pub fn close_type(&self, a: &str) -> FTerm {
        self.close_type_at(a, 0)
    }

    fn close_type_at(&self, a: &str, k: usize) -> FTerm {
        match self {
            FTerm::Var(_) | FTerm::Bound(_) => self.clone(),
            FTerm::Lam(h, ty, b) => FTerm::Lam(h.clone(), ty.close_at(a, k), Arc::new(b.close_type_at(a, k))),
            FTerm::App(f, x) => FTerm::app(f.close_type_at(a, k), x.close_type_at(a, k)),
            FTerm::TyLam(h, b) => FTerm::TyLam(h.clone(), Arc::new(b.close_type_at(a, k + 1))),
            FTerm::TyApp(t, ty) => FTerm::tyapp(t.close_type_at(a, k), ty.close_at(a, k)),
        }
    }

    pub fn free_vars(&self) -> BTreeSet<Name> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut out);
        out
    }

    fn collect_free(&self, out: &mut BTreeSet<Name>) {
        match self {
            FTerm::Var(x) => {
                out.insert(x.clone());
            }
            FTerm::Bound(_) => {}
            FTerm::Lam(_, _, b) | FTerm::TyLam(_, b) | FTerm::TyApp(b, _) => b.collect_free(out),
            FTerm::App(f, a) => {
                f.collect_free(out);
                a.collect_free(out);
            }
        }
    }

    pub fn has_free(&self, x: &str) -> bool {
        match self {
            FTerm::Var(y) => &**y == x,
            FTerm::Bound(_) => false,
            FTerm::Lam(_, _, b) | FTerm::TyLam(_, b) | FTerm::TyApp(b, _) => b.has_free(x),
            FTerm::App(f, a) => f.has_free(x) || a.has_free(x),
        }
    }

    /// Free type variables of the annotations.
    pub fn free_type_vars(&self) -> BTreeSet<Name> {
        match self {
            FTerm::Var(_) | FTerm::Bound(_) => BTreeSet::new(),
            FTerm::Lam(_, ty, b) => {
                let mut s = ty.free_vars();
                s.extend(b.free_type_vars());
                s
            }
            FTerm::App(f, a) => {
                let mut s = f.free_type_vars();
                s.extend(a.free_type_vars());
                s
            }
            FTerm::TyLam(_, b) => b.free_type_vars(),
            FTerm::TyApp(t, ty) => {
                let mut s = t.free_type_vars();
                s.extend(ty.free_vars());
                s
            }
        }
    }

    /// Capture-free substitution of `s` for the free variable `x`.
    pub fn substitute(&self, x: &str, s: &FTerm) -> FTerm {
        self.close(x).instantiate(s)
    }

    pub fn is_redex(&self) -> bool {
        matches!(self, FTerm::App(f, _) if matches!(**f, FTerm::Lam(..)))
            || matches!(self, FTerm::TyApp(t, _) if matches!(**t, FTerm::TyLam(..)))
    }

    /// Contract a root redex.
    pub fn contract(&self) -> Option<FTerm> {
        match self {
            FTerm::App(f, a) => match &**f {
                FTerm::Lam(_, _, body) => Some(body.instantiate(a)),
                _ => None,
            },
            FTerm::TyApp(t, ty) => match &**t {
                FTerm::TyLam(_, body) => Some(body.instantiate_type(ty)),
                _ => None,
            },
            _ => None,
        }
    }

    fn children(&self) -> Vec<&Arc<FTerm>> {
        match self {
            FTerm::Var(_) | FTerm::Bound(_) => vec![],
            FTerm::Lam(_, _, b) | FTerm::TyLam(_, b) | FTerm::TyApp(b, _) => vec![b],
            FTerm::App(f, a) => vec![f, a],
        }
    }

    fn with_child(&self, i: usize, new: FTerm) -> FTerm {
        let new = Arc::new(new);
        match (self, i) {
            (FTerm::Lam(h, ty, _), 0) => FTerm::Lam(h.clone(), ty.clone(), new),
            (FTerm::TyLam(h, _), 0) => FTerm::TyLam(h.clone(), new),
            (FTerm::TyApp(_, ty), 0) => FTerm::TyApp(new, ty.clone()),
            (FTerm::App(_, a), 0) => FTerm::App(new, a.clone()),
            (FTerm::App(f, _), 1) => FTerm::App(f.clone(), new),
            _ => panic!("no child {i}"),
        }
    }

    pub fn at(&self, path: &[usize]) -> Option<&FTerm> {
        match path.split_first() {
            None => Some(self),
            Some((i, rest)) => self.children().get(*i)?.at(rest),
        }
    }

    pub fn replace_at(&self, path: &[usize], new: FTerm) -> FTerm {
        match path.split_first() {
            None => new,
            Some((i, rest)) => {
                let child = self.children()[*i].replace_at(rest, new);
                self.with_child(*i, child)
            }
        }
    }

    /// Positions of every redex, outermost and leftmost first.
    pub fn redexes(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        self.collect_redexes(&mut path, &mut out);
        out
    }

    fn collect_redexes(&self, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if self.is_redex() {
            out.push(path.clone());
        }
        for (i, c) in self.children().into_iter().enumerate() {
            path.push(i);
            c.collect_redexes(path, out);
            path.pop();
        }
    }

    /// Contract the redex at `path`.
    pub fn step_at(&self, path: &[usize]) -> Option<FTerm> {
        let reduct = self.at(path)?.contract()?;
        Some(self.replace_at(path, reduct))
    }

    /// Every one-step reduct.
    pub fn reducts(&self) -> Vec<FTerm> {
        self.redexes().iter().filter_map(|p| self.step_at(p)).collect()
    }

    /// One leftmost-outermost step.
    pub fn step(&self) -> Option<FTerm> {
        if let Some(r) = self.contract() {
            return Some(r);
        }
        for (i, c) in self.children().into_iter().enumerate() {
            if let Some(r) = c.step() {
                return Some(self.with_child(i, r));
            }
        }
        None
    }

    pub fn is_normal(&self) -> bool {
        self.redexes().is_empty()
    }
}

/// One leftmost-outermost step.
pub fn f_step(t: &FTerm) -> Option<FTerm> {
    t.step()
}

/// Leftmost-outermost normalization within `fuel` steps.
pub fn f_normalize(t: &FTerm, fuel: usize) -> Result<FTerm, FuelExhausted> {
    let mut cur = t.clone();
    for _ in 0..fuel {
        match cur.step() {
            Some(next) => cur = next,
            None => return Ok(cur),
        }
    }
    if cur.step().is_none() {
        Ok(cur)
    } else {
        Err(FuelExhausted { steps: fuel, last: cur })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn beta_rules() {
        let id = FTerm::lam("x", FType::var("a"), FTerm::var("x"));
        assert_eq!(f_step(&FTerm::app(id, FTerm::var("s"))), Some(FTerm::var("s")));
        let poly = FTerm::tylam("b", FTerm::lam("x", FType::var("b"), FTerm::var("x")));
        let r = f_step(&FTerm::tyapp(poly, FType::var("c"))).unwrap();
        assert_eq!(r, FTerm::lam("x", FType::var("c"), FTerm::var("x")));
    }

    #[test]
    fn substitution_avoids_capture() {
        // (fun x. fun y. x) y  ->  fun y'. y
        let k = FTerm::lam("x", FType::var("a"), FTerm::lam("y", FType::var("a"), FTerm::var("x")));
        let r = f_step(&FTerm::app(k, FTerm::var("y"))).unwrap();
        assert_eq!(r, FTerm::lam("z", FType::var("a"), FTerm::var("y")));
    }

    #[test]
    fn type_substitution_under_term_binders() {
        // (tfun b -> fun (x : b) -> tfun c -> x [b]) [d]
        let inner = FTerm::tylam("c", FTerm::tyapp(FTerm::var("x"), FType::var("b")));
        let t = FTerm::tylam("b", FTerm::lam("x", FType::var("b"), inner));
        let r = f_step(&FTerm::tyapp(t, FType::var("d"))).unwrap();
        let expected =
            FTerm::lam("x", FType::var("d"), FTerm::tylam("c", FTerm::tyapp(FTerm::var("x"), FType::var("d"))));
        assert_eq!(r, expected);
    }

    #[test]
    fn fuel_is_reported() {
        // an untyped loop
        let w = FTerm::lam("x", FType::var("a"), FTerm::app(FTerm::var("x"), FTerm::var("x")));
        let omega = FTerm::app(w.clone(), w);
        assert!(f_normalize(&omega, 10).is_err());
    }
}
