//! Pure and moded propositions.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// Identifier used for propositional variables and term variables.
pub type Name = Arc<str>;

/// A propositional formula over variables with conjunction, disjunction and negation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Prop {
    Var(Name),
    And(Arc<Prop>, Arc<Prop>),
    Or(Arc<Prop>, Arc<Prop>),
    Neg(Arc<Prop>),
}

impl Prop {
    pub fn var(name: &str) -> Prop {
        Prop::Var(Name::from(name))
    }

    pub fn and(a: Prop, b: Prop) -> Prop {
        Prop::And(Arc::new(a), Arc::new(b))
    }

    pub fn or(a: Prop, b: Prop) -> Prop {
        Prop::Or(Arc::new(a), Arc::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(a: Prop) -> Prop {
        Prop::Neg(Arc::new(a))
    }

    /// Number of symbols: every variable occurrence and connective counts once.
    pub fn size(&self) -> usize {
        match self {
            Prop::Var(_) => 1,
            Prop::And(a, b) | Prop::Or(a, b) => 1 + a.size() + b.size(),
            Prop::Neg(a) => 1 + a.size(),
        }
    }

    /// Height of the syntax tree, a variable having depth 1.
    pub fn depth(&self) -> usize {
        match self {
            Prop::Var(_) => 1,
            Prop::And(a, b) | Prop::Or(a, b) => 1 + a.depth().max(b.depth()),
            Prop::Neg(a) => 1 + a.depth(),
        }
    }

    /// De Morgan dual: swaps conjunction and disjunction, fixes variables.
    pub fn dual(&self) -> Prop {
        match self {
            Prop::Var(_) => self.clone(),
            Prop::And(a, b) => Prop::or(a.dual(), b.dual()),
            Prop::Or(a, b) => Prop::and(a.dual(), b.dual()),
            Prop::Neg(a) => Prop::neg(a.dual()),
        }
    }

    pub fn vars(&self) -> BTreeSet<Name> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    pub(crate) fn collect_vars(&self, out: &mut BTreeSet<Name>) {
        match self {
            Prop::Var(x) => {
                out.insert(x.clone());
            }
            Prop::And(a, b) | Prop::Or(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Prop::Neg(a) => a.collect_vars(out),
        }
    }

    pub fn with_mode(self, mode: Mode) -> MProp {
        MProp::new(self, mode)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Strength {
    Strong,
    Classical,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Mode {
    pub strength: Strength,
    pub sign: Sign,
}

impl Mode {
    pub const STRONG_POS: Mode = Mode { strength: Strength::Strong, sign: Sign::Pos };
    pub const STRONG_NEG: Mode = Mode { strength: Strength::Strong, sign: Sign::Neg };
    pub const CLASSICAL_POS: Mode = Mode { strength: Strength::Classical, sign: Sign::Pos };
    pub const CLASSICAL_NEG: Mode = Mode { strength: Strength::Classical, sign: Sign::Neg };

    pub const ALL: [Mode; 4] = [Mode::STRONG_POS, Mode::STRONG_NEG, Mode::CLASSICAL_POS, Mode::CLASSICAL_NEG];

    pub fn strong(sign: Sign) -> Mode {
        Mode { strength: Strength::Strong, sign }
    }

    pub fn classical(sign: Sign) -> Mode {
        Mode { strength: Strength::Classical, sign }
    }

    pub fn flip(self) -> Mode {
        Mode { sign: self.sign.flip(), ..self }
    }

    pub fn is_strong(self) -> bool {
        self.strength == Strength::Strong
    }

    pub fn is_classical(self) -> bool {
        self.strength == Strength::Classical
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.strength {
            Strength::Strong => 's',
            Strength::Classical => 'c',
        };
        write!(f, "^{}{}", s, self.sign.symbol())
    }
}

/// A pure proposition together with one of the four modes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MProp {
    pub base: Prop,
    pub mode: Mode,
}

impl MProp {
    pub fn new(base: Prop, mode: Mode) -> MProp {
        MProp { base, mode }
    }

    pub fn sign(&self) -> Sign {
        self.mode.sign
    }

    pub fn is_strong(&self) -> bool {
        self.mode.is_strong()
    }

    pub fn is_classical(&self) -> bool {
        self.mode.is_classical()
    }

    /// Flip the sign, keep the strength.
    pub fn opposite(&self) -> MProp {
        MProp::new(self.base.clone(), self.mode.flip())
    }

    /// Keep the sign, make the strength classical.
    pub fn truncate(&self) -> MProp {
        MProp::new(self.base.clone(), Mode::classical(self.mode.sign))
    }

    /// Same base and sign at strong strength.
    pub fn strengthen(&self) -> MProp {
        MProp::new(self.base.clone(), Mode::strong(self.mode.sign))
    }

    pub fn measure(&self) -> usize {
        let n = 2 * self.base.size();
        if self.is_classical() {
            n + 1
        } else {
            n
        }
    }

    pub fn dual(&self) -> MProp {
        MProp::new(self.base.dual(), self.mode.flip())
    }

    pub fn vars(&self) -> BTreeSet<Name> {
        self.base.vars()
    }
}
