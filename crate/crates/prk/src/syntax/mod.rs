//! Abstract syntax of propositions and proof terms, with parsing and printing.

pub mod context;
pub mod parse;
mod print;
pub mod prop;
pub mod term;

pub use context::{Context, DuplicateVariable};
pub use parse::{
    parse_judgment, parse_mprop, parse_pure, parse_sequent, parse_term, parse_term_internal, Judgment, ParseError,
    ParseErrorKind, Sequent, RESERVED_FALSITY,
};
pub use prop::{MProp, Mode, Name, Prop, Sign, Strength};
pub use term::{fresh_name, Binder, Hint, Idx, Term};
