//! Proof terms in locally nameless form.
//!
//! Free variables carry names, bound variables are de Bruijn indices counted
//! over the `Case` and `CLam` binders. A binder keeps a name hint for
//! printing which never takes part in equality, so `==` is α-equivalence.

use std::collections::BTreeSet;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::prop::{MProp, Name, Sign};

/// Projection and injection index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Idx {
    One,
    Two,
}

impl Idx {
    pub fn from_number(n: u32) -> Option<Idx> {
        match n {
            1 => Some(Idx::One),
            2 => Some(Idx::Two),
            _ => None,
        }
    }

    pub fn number(self) -> u32 {
        match self {
            Idx::One => 1,
            Idx::Two => 2,
        }
    }

    pub fn pick<T>(self, first: T, second: T) -> T {
        match self {
            Idx::One => first,
            Idx::Two => second,
        }
    }
}

/// Printing hint for a binder. Every hint compares equal to every other.
#[derive(Clone, Debug)]
pub struct Hint(pub Name);

impl PartialEq for Hint {
    fn eq(&self, _: &Hint) -> bool {
        true
    }
}

impl Eq for Hint {}

impl Hash for Hint {
    fn hash<H: Hasher>(&self, _: &mut H) {}
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Binder {
    pub hint: Hint,
    pub ty: MProp,
}

impl Binder {
    pub fn new(hint: &str, ty: MProp) -> Binder {
        Binder { hint: Hint(Name::from(hint)), ty }
    }

    pub fn name(&self) -> &Name {
        &self.hint.0
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Term {
    Var(Name),
    Bound(usize),
    Abs(MProp, Arc<Term>, Arc<Term>),
    Pair(Sign, Arc<Term>, Arc<Term>),
    Proj(Sign, Idx, Arc<Term>),
    Inj(Sign, Idx, Arc<Term>),
    Case(Sign, Arc<Term>, Binder, Arc<Term>, Binder, Arc<Term>),
    NegI(Sign, Arc<Term>),
    NegE(Sign, Arc<Term>),
    CLam(Sign, Binder, Arc<Term>),
    CApp(Sign, Arc<Term>, Arc<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(Name::from(name))
    }

    pub fn abs(q: MProp, t: Term, s: Term) -> Term {
        Term::Abs(q, Arc::new(t), Arc::new(s))
    }

    pub fn pair(sign: Sign, t: Term, s: Term) -> Term {
        Term::Pair(sign, Arc::new(t), Arc::new(s))
    }

    pub fn proj(sign: Sign, i: Idx, t: Term) -> Term {
        Term::Proj(sign, i, Arc::new(t))
    }

    pub fn inj(sign: Sign, i: Idx, t: Term) -> Term {
        Term::Inj(sign, i, Arc::new(t))
    }

    pub fn negi(sign: Sign, t: Term) -> Term {
        Term::NegI(sign, Arc::new(t))
    }

    pub fn nege(sign: Sign, t: Term) -> Term {
        Term::NegE(sign, Arc::new(t))
    }

    pub fn capp(sign: Sign, t: Term, s: Term) -> Term {
        Term::CApp(sign, Arc::new(t), Arc::new(s))
    }

    /// `clam(x:ty. body)` where `x` occurs free in `body`.
    pub fn clam(sign: Sign, x: &str, ty: MProp, body: Term) -> Term {
        let body = body.close(x);
        Term::CLam(sign, Binder::new(x, ty), Arc::new(body))
    }

    /// `case(t, x:tx. s, y:ty. u)` where `x` is free in `s` and `y` in `u`.
    #[allow(clippy::too_many_arguments)]
    pub fn case(sign: Sign, t: Term, x: &str, tx: MProp, s: Term, y: &str, ty: MProp, u: Term) -> Term {
        Term::Case(
            sign,
            Arc::new(t),
            Binder::new(x, tx),
            Arc::new(s.close(x)),
            Binder::new(y, ty),
            Arc::new(u.close(y)),
        )
    }

    /// Number of constructor nodes.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) | Term::Bound(_) => 1,
            Term::Abs(_, t, s) | Term::Pair(_, t, s) | Term::CApp(_, t, s) => 1 + t.size() + s.size(),
            Term::Proj(_, _, t) | Term::Inj(_, _, t) | Term::NegI(_, t) | Term::NegE(_, t) => 1 + t.size(),
            Term::CLam(_, _, t) => 1 + t.size(),
            Term::Case(_, t, _, s, _, u) => 1 + t.size() + s.size() + u.size(),
        }
    }

    /// Immediate subterms, left to right. Binder bodies are returned unopened.
    pub fn children(&self) -> Vec<&Arc<Term>> {
        match self {
            Term::Var(_) | Term::Bound(_) => vec![],
            Term::Abs(_, t, s) | Term::Pair(_, t, s) | Term::CApp(_, t, s) => vec![t, s],
            Term::Proj(_, _, t) | Term::Inj(_, _, t) | Term::NegI(_, t) | Term::NegE(_, t) => vec![t],
            Term::CLam(_, _, t) => vec![t],
            Term::Case(_, t, _, s, _, u) => vec![t, s, u],
        }
    }

    /// How many binders separate child `i` from this node.
    pub fn binders_above_child(&self, i: usize) -> usize {
        match self {
            Term::CLam(..) => 1,
            Term::Case(..) if i > 0 => 1,
            _ => 0,
        }
    }

    /// Rebuild with child `i` replaced.
    pub fn with_child(&self, i: usize, new: Term) -> Term {
        let new = Arc::new(new);
        let mut out = self.clone();
        match &mut out {
            Term::Var(_) | Term::Bound(_) => panic!("leaf has no children"),
            Term::Abs(_, t, s) | Term::Pair(_, t, s) | Term::CApp(_, t, s) => {
                if i == 0 {
                    *t = new
                } else {
                    *s = new
                }
            }
            Term::Proj(_, _, t) | Term::Inj(_, _, t) | Term::NegI(_, t) | Term::NegE(_, t) => *t = new,
            Term::CLam(_, _, t) => *t = new,
            Term::Case(_, t, _, s, _, u) => match i {
                0 => *t = new,
                1 => *s = new,
                _ => *u = new,
            },
        }
        out
    }

    /// Rebuild with every child transformed by `f(depth_increment, child)`.
    fn map_children(&self, mut f: impl FnMut(usize, &Term) -> Term) -> Term {
        match self {
            Term::Var(_) | Term::Bound(_) => self.clone(),
            Term::Abs(q, t, s) => Term::abs(q.clone(), f(0, t), f(0, s)),
            Term::Pair(g, t, s) => Term::pair(*g, f(0, t), f(0, s)),
            Term::CApp(g, t, s) => Term::capp(*g, f(0, t), f(0, s)),
            Term::Proj(g, i, t) => Term::proj(*g, *i, f(0, t)),
            Term::Inj(g, i, t) => Term::inj(*g, *i, f(0, t)),
            Term::NegI(g, t) => Term::negi(*g, f(0, t)),
            Term::NegE(g, t) => Term::nege(*g, f(0, t)),
            Term::CLam(g, b, t) => Term::CLam(*g, b.clone(), Arc::new(f(1, t))),
            Term::Case(g, t, b1, s, b2, u) => {
                Term::Case(*g, Arc::new(f(0, t)), b1.clone(), Arc::new(f(1, s)), b2.clone(), Arc::new(f(1, u)))
            }
        }
    }

    /// Add `d` to every dangling index at or above `cutoff`.
    pub fn shift(&self, d: isize, cutoff: usize) -> Term {
        match self {
            Term::Bound(i) if *i >= cutoff => {
                let j = *i as isize + d;
                assert!(j >= 0, "negative de Bruijn index");
                Term::Bound(j as usize)
            }
            Term::Var(_) | Term::Bound(_) => self.clone(),
            _ => self.map_children(|k, c| c.shift(d, cutoff + k)),
        }
    }

    /// Replace dangling index 0 by `s`, as when entering a binder body.
    pub fn instantiate(&self, s: &Term) -> Term {
        self.subst_index(0, s)
    }

    fn subst_index(&self, depth: usize, s: &Term) -> Term {
        match self {
            Term::Bound(i) if *i == depth => s.shift(depth as isize, 0),
            Term::Bound(i) if *i > depth => Term::Bound(i - 1),
            Term::Var(_) | Term::Bound(_) => self.clone(),
            _ => self.map_children(|k, c| c.subst_index(depth + k, s)),
        }
    }

    /// Open a binder body with a free variable.
    pub fn open(&self, x: &str) -> Term {
        self.instantiate(&Term::var(x))
    }

    /// Turn free occurrences of `x` into the dangling index 0.
    pub fn close(&self, x: &str) -> Term {
        self.close_at(x, 0)
    }

    fn close_at(&self, x: &str, depth: usize) -> Term {
        match self {
            Term::Var(y) if &**y == x => Term::Bound(depth),
            Term::Bound(i) if *i >= depth => Term::Bound(i + 1),
            Term::Var(_) | Term::Bound(_) => self.clone(),
            _ => self.map_children(|k, c| c.close_at(x, depth + k)),
        }
    }

    /// Does the dangling index `k` occur?
    pub fn mentions_index(&self, k: usize) -> bool {
        match self {
            Term::Bound(i) => *i == k,
            Term::Var(_) => false,
            _ => {
                let mut found = false;
                self.for_each_child(|d, c| found = found || c.mentions_index(k + d));
                found
            }
        }
    }

    /// Does any dangling index occur?
    pub fn is_locally_closed(&self) -> bool {
        self.max_dangling(0).is_none()
    }

    fn max_dangling(&self, depth: usize) -> Option<usize> {
        match self {
            Term::Bound(i) if *i >= depth => Some(i - depth),
            Term::Var(_) | Term::Bound(_) => None,
            _ => {
                let mut m: Option<usize> = None;
                self.for_each_child(|d, c| {
                    if let Some(v) = c.max_dangling(depth + d) {
                        m = Some(m.map_or(v, |w| w.max(v)));
                    }
                });
                m
            }
        }
    }

    fn for_each_child(&self, mut f: impl FnMut(usize, &Term)) {
        for (i, c) in self.children().into_iter().enumerate() {
            f(self.binders_above_child(i), c);
        }
    }

    pub fn free_vars(&self) -> BTreeSet<Name> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut out);
        out
    }

    fn collect_free(&self, out: &mut BTreeSet<Name>) {
        match self {
            Term::Var(x) => {
                out.insert(x.clone());
            }
            Term::Bound(_) => {}
            _ => self.for_each_child(|_, c| c.collect_free(out)),
        }
    }

    pub fn has_free(&self, x: &str) -> bool {
        match self {
            Term::Var(y) => &**y == x,
            Term::Bound(_) => false,
            _ => self.children().iter().any(|c| c.has_free(x)),
        }
    }

    /// Capture-avoiding substitution of `s` for the free variable `x`.
    pub fn substitute(&self, x: &str, s: &Term) -> Term {
        self.subst_free(x, s, 0)
    }

    fn subst_free(&self, x: &str, s: &Term, depth: usize) -> Term {
        match self {
            Term::Var(y) if &**y == x => s.shift(depth as isize, 0),
            Term::Var(_) | Term::Bound(_) => self.clone(),
            _ => self.map_children(|k, c| c.subst_free(x, s, depth + k)),
        }
    }

    /// Flip every sign and dualize every annotation.
    pub fn dual(&self) -> Term {
        let b = |b: &Binder| Binder { hint: b.hint.clone(), ty: b.ty.dual() };
        match self {
            Term::Var(_) | Term::Bound(_) => self.clone(),
            Term::Abs(q, t, s) => Term::abs(q.dual(), t.dual(), s.dual()),
            Term::Pair(g, t, s) => Term::pair(g.flip(), t.dual(), s.dual()),
            Term::CApp(g, t, s) => Term::capp(g.flip(), t.dual(), s.dual()),
            Term::Proj(g, i, t) => Term::proj(g.flip(), *i, t.dual()),
            Term::Inj(g, i, t) => Term::inj(g.flip(), *i, t.dual()),
            Term::NegI(g, t) => Term::negi(g.flip(), t.dual()),
            Term::NegE(g, t) => Term::nege(g.flip(), t.dual()),
            Term::CLam(g, x, t) => Term::CLam(g.flip(), b(x), Arc::new(t.dual())),
            Term::Case(g, t, x, s, y, u) => {
                Term::Case(g.flip(), Arc::new(t.dual()), b(x), Arc::new(s.dual()), b(y), Arc::new(u.dual()))
            }
        }
    }

    /// Subterm at a path of child indices.
    pub fn at(&self, path: &[usize]) -> Option<&Term> {
        match path.split_first() {
            None => Some(self),
            Some((&i, rest)) => self.children().get(i).and_then(|c| c.at(rest)),
        }
    }

    /// Replace the subterm at `path`.
    pub fn replace_at(&self, path: &[usize], new: Term) -> Term {
        match path.split_first() {
            None => new,
            Some((&i, rest)) => {
                let child = self.children()[i].replace_at(rest, new);
                self.with_child(i, child)
            }
        }
    }

    /// Binder annotations and hints along a path, outermost first.
    pub fn binders_along(&self, path: &[usize]) -> Vec<Binder> {
        let mut out = Vec::new();
        let mut cur = self;
        for &i in path {
            match cur {
                Term::CLam(_, b, _) => out.push(b.clone()),
                Term::Case(_, _, b1, _, b2, _) if i > 0 => out.push(if i == 1 { b1.clone() } else { b2.clone() }),
                _ => {}
            }
            cur = cur.children()[i];
        }
        out
    }

    pub fn sign(&self) -> Option<Sign> {
        match self {
            Term::Pair(g, ..)
            | Term::Proj(g, ..)
            | Term::Inj(g, ..)
            | Term::Case(g, ..)
            | Term::NegI(g, ..)
            | Term::NegE(g, ..)
            | Term::CLam(g, ..)
            | Term::CApp(g, ..) => Some(*g),
            _ => None,
        }
    }
}

/// Pick a name starting with `base` that is not in `avoid`.
pub fn fresh_name(base: &str, avoid: &dyn Fn(&str) -> bool) -> String {
    if !avoid(base) {
        return base.to_string();
    }
    (0..).map(|i| format!("{base}{i}")).find(|n| !avoid(n)).expect("unbounded supply")
}
