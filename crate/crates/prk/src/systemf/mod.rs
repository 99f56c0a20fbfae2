//! System F with the recursive constraints `Pos<A,B> ≡ Neg<A,B> -> A` and
//! `Neg<A,B> ≡ Pos<A,B> -> B`, and the translation of typed proof terms
//! into it.

pub mod encode;
mod fterm;
mod ftype;
mod infer;
mod text;
mod translate;

pub use fterm::{f_normalize, f_step, FTerm, FuelExhausted};
pub use ftype::{compl, ftype_equiv, negvars, polarity, posvars, wnegvars, wposvars, FType, Polarity, VarKey};
pub use infer::{as_arrow, f_infer, FContext, FTypeError};
pub use text::{parse_fterm, parse_ftype, FParseError};
pub use translate::{
    check_simulation, translate_context, translate_prop, translate_term, Simulation, TranslateError, Translator,
    SIMULATION_STATE_LIMIT,
};
