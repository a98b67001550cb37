//! Exact computations for squarefree monomial ideals, centred on the
//! generalized path ideals `I(m,l,k)` of the line graph.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! - [`monomial`]: squarefree monomials as bitsets and monomial-ideal algebra,
//! - [`path`]: construction of path ideals and closed-form evaluators for
//!   projective dimension, regularity and depth,
//! - [`betti`]: graded Betti tables by Hochster's formula and by the
//!   Taylor complex tensored with the residue field,
//! - [`splitting`]: Betti-splitting checks,
//! - [`topology`]: clutters, cover complexes, shellings, minors and the
//!   sequentially Cohen–Macaulay test.
//!
//! IO, text formats and the command-line front end live in the
//! `pathideal-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod betti;
pub mod chain;
mod error;
pub mod field;
pub mod linalg;
pub mod monomial;
pub mod path;
pub mod simplicial;
pub mod splitting;
pub mod topology;
mod varset;

pub use betti::{BettiTable, Caps, Depth, Invariants, Method};
pub use error::{Error, Result};
pub use field::FieldSpec;
pub use monomial::{Monomial, MonomialIdeal};
pub use path::{Branch, FormulaReg, FormulaResult, PathParams, Regime};
pub use simplicial::SimplicialComplex;
pub use topology::Clutter;
pub use varset::{VarSet, MAX_VARS};
