//! A workbench for the logic PRK and its proof-term calculus.
//!
//! The crate covers concrete syntax, type inference with derivation trees,
//! the rewriting calculus with and without eta, a translation into System F
//! with recursive Pos/Neg constraints, finite Kripke models, and an
//! embedding of classical natural deduction.

// Type errors carry the offending terms and propositions by value; they are
// built once per failed check, so their size does not matter.
#![allow(clippy::result_large_err)]

pub mod classical;
pub mod gen;
pub mod kripke;
pub mod library;
pub mod rewrite;
pub mod syntax;
pub mod systemf;
pub mod typing;
