//! Typing contexts: assumptions keyed by distinct variables, insertion order kept.

use std::fmt;

use thiserror::Error;

use super::prop::{MProp, Name};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("variable `{0}` is already declared in the context")]
pub struct DuplicateVariable(pub Name);

#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct Context {
    entries: Vec<(Name, MProp)>,
}

impl Context {
    pub fn new() -> Context {
        Context::default()
    }

    pub fn from_entries<I, S>(entries: I) -> Result<Context, DuplicateVariable>
    where
        I: IntoIterator<Item = (S, MProp)>,
        S: AsRef<str>,
    {
        let mut ctx = Context::new();
        for (x, p) in entries {
            ctx.insert(x.as_ref(), p)?;
        }
        Ok(ctx)
    }

    pub fn insert(&mut self, x: &str, p: MProp) -> Result<(), DuplicateVariable> {
        if self.contains(x) {
            return Err(DuplicateVariable(Name::from(x)));
        }
        self.entries.push((Name::from(x), p));
        Ok(())
    }

    /// A copy extended with one more assumption.
    pub fn extended(&self, x: &str, p: MProp) -> Result<Context, DuplicateVariable> {
        let mut c = self.clone();
        c.insert(x, p)?;
        Ok(c)
    }

    pub fn lookup(&self, x: &str) -> Option<&MProp> {
        self.entries.iter().find(|(y, _)| &**y == x).map(|(_, p)| p)
    }

    pub fn contains(&self, x: &str) -> bool {
        self.lookup(x).is_some()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Name, &MProp)> {
        self.entries.iter().map(|(x, p)| (x, p))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Apply `f` to every assumption.
    pub fn map_props(&self, f: impl Fn(&MProp) -> MProp) -> Context {
        Context { entries: self.entries.iter().map(|(x, p)| (x.clone(), f(p))).collect() }
    }

    /// Replace the proposition of an existing assumption.
    pub fn with_updated(&self, x: &str, p: MProp) -> Option<Context> {
        let mut c = self.clone();
        let slot = c.entries.iter_mut().find(|(y, _)| &**y == x)?;
        slot.1 = p;
        Some(c)
    }

    pub fn without(&self, x: &str) -> Context {
        Context { entries: self.entries.iter().filter(|(y, _)| &**y != x).cloned().collect() }
    }

    pub fn dual(&self) -> Context {
        self.map_props(MProp::dual)
    }

    /// Same assumptions regardless of order.
    pub fn same_assumptions(&self, other: &Context) -> bool {
        self.len() == other.len() && self.iter().all(|(x, p)| other.lookup(x) == Some(p))
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (x, p)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x} : {p}")?;
        }
        Ok(())
    }
}
