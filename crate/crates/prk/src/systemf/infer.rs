//! Algorithmic typing for System F with the Pos/Neg constraints.

use std::collections::BTreeSet;

use thiserror::Error;

use super::fterm::FTerm;
use super::ftype::{ftype_equiv, FType};
use crate::syntax::{fresh_name, Name};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FTypeError {
    #[error("unbound variable `{0}`")]
    UnboundVariable(Name),
    #[error("expected a function, found a term of type {0}")]
    NotAnArrow(FType),
    #[error("expected a polymorphic term, found a term of type {0}")]
    NotAForall(FType),
    #[error("argument of type {found} does not match domain {expected}")]
    DomainMismatch { expected: FType, found: FType },
    #[error("dangling bound variable")]
    DanglingIndex,
}

/// A typing context of named term variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FContext {
    entries: Vec<(Name, FType)>,
}

impl FContext {
    pub fn new() -> FContext {
        FContext::default()
    }

    pub fn push(&mut self, x: &str, ty: FType) {
        self.entries.push((Name::from(x), ty));
    }

    pub fn lookup(&self, x: &str) -> Option<&FType> {
        self.entries.iter().rev().find(|(y, _)| &**y == x).map(|(_, t)| t)
    }

    pub fn iter(&self) -> impl Iterator<Item = &(Name, FType)> {
        self.entries.iter()
    }

    fn contains(&self, x: &str) -> bool {
        self.entries.iter().any(|(y, _)| &**y == x)
    }

    fn type_vars(&self) -> BTreeSet<Name> {
        self.entries.iter().flat_map(|(_, t)| t.free_vars()).collect()
    }
}

/// View a type as an arrow, unfolding a constraint variable if needed.
pub fn as_arrow(t: &FType) -> Option<(FType, FType)> {
    match t {
        FType::Arrow(a, b) => Some(((**a).clone(), (**b).clone())),
        FType::Pos(..) | FType::Neg(..) => as_arrow(&t.unfold()?),
        _ => None,
    }
}

/// The type of `t` under `ctx`, with conversion at application arguments.
pub fn f_infer(ctx: &FContext, t: &FTerm) -> Result<FType, FTypeError> {
    let mut ctx = ctx.clone();
    infer(&mut ctx, t)
}

fn infer(ctx: &mut FContext, t: &FTerm) -> Result<FType, FTypeError> {
    match t {
        FTerm::Var(x) => ctx.lookup(x).cloned().ok_or_else(|| FTypeError::UnboundVariable(x.clone())),
        FTerm::Bound(_) => Err(FTypeError::DanglingIndex),
        FTerm::Lam(h, ty, body) => {
            let x = fresh_name(&format!("{}'", h.0), &|n| ctx.contains(n) || body.has_free(n));
            ctx.push(&x, ty.clone());
            let r = infer(ctx, &body.open(&x));
            ctx.entries.pop();
            Ok(FType::arrow(ty.clone(), r?))
        }
        FTerm::App(f, a) => {
            let ft = infer(ctx, f)?;
            let (dom, cod) = as_arrow(&ft).ok_or(FTypeError::NotAnArrow(ft))?;
            let at = infer(ctx, a)?;
            if ftype_equiv(&dom, &at) {
                Ok(cod)
            } else {
                Err(FTypeError::DomainMismatch { expected: dom, found: at })
            }
        }
        FTerm::TyLam(h, body) => {
            let used = ctx.type_vars();
            let tv = body.free_type_vars();
            let a = fresh_name(&format!("{}'", h.0), &|n| used.contains(n) || tv.contains(n));
            let r = infer(ctx, &body.open_type(&a))?;
            Ok(FType::forall(&a, r))
        }
        FTerm::TyApp(f, a) => match infer(ctx, f)? {
            FType::Forall(_, body) => Ok(body.instantiate(a)),
            other => Err(FTypeError::NotAForall(other)),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::Idx;
    use crate::systemf::encode;

    #[test]
    fn encodings_have_their_types() {
        assert_eq!(f_infer(&FContext::new(), &encode::triv()).unwrap(), encode::one());
        let (a, b) = (FType::var("a"), FType::var("b"));
        let mut ctx = FContext::new();
        ctx.push("t", a.clone());
        ctx.push("s", b.clone());
        let p = encode::pair(&a, &b, &FTerm::var("t"), &FTerm::var("s"));
        assert_eq!(f_infer(&ctx, &p).unwrap(), encode::times(&a, &b));
        let pr = encode::proj(Idx::Two, &a, &b, p);
        assert_eq!(f_infer(&ctx, &pr).unwrap(), b);
        let i = encode::inj(Idx::One, &a, &b, &FTerm::var("t"));
        assert_eq!(f_infer(&ctx, &i).unwrap(), encode::plus(&a, &b));
    }

    #[test]
    fn conversion_at_application() {
        let (a, b) = (FType::var("a"), FType::var("b"));
        let p = FType::pos(a.clone(), b.clone());
        let mut ctx = FContext::new();
        ctx.push("y", FType::arrow(FType::neg(a.clone(), b.clone()), a.clone()));
        let t = FTerm::app(FTerm::lam("x", p.clone(), FTerm::var("x")), FTerm::var("y"));
        assert_eq!(f_infer(&ctx, &t).unwrap(), p);
        ctx.push("z", b.clone());
        let bad = FTerm::app(FTerm::lam("x", p, FTerm::var("x")), FTerm::var("z"));
        assert!(matches!(f_infer(&ctx, &bad), Err(FTypeError::DomainMismatch { .. })));
    }

    #[test]
    fn constraint_variables_apply_as_functions() {
        let (a, b) = (FType::var("a"), FType::var("b"));
        let mut ctx = FContext::new();
        ctx.push("x", FType::pos(a.clone(), b.clone()));
        ctx.push("y", FType::neg(a.clone(), b.clone()));
        let t = FTerm::app(FTerm::var("x"), FTerm::var("y"));
        assert_eq!(f_infer(&ctx, &t).unwrap(), a);
        assert!(f_infer(&ctx, &FTerm::app(FTerm::var("x"), FTerm::var("x"))).is_err());
    }
}
