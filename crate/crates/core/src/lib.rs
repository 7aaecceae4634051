//! Exact workbench for incidence geometry experiments: certified polynomial
//! partitions of finite point sets, exact incidence counting for algebraic
//! curve families, degrees-of-freedom audits, and evaluators for the standard
//! incidence bounds with exact rational exponents.
//!
//! All geometric predicates run over arbitrary-precision rationals; floating
//! point appears only when bound formulas are evaluated numerically for
//! reports.

pub mod algebra;
pub mod bounds;
pub mod error;
pub mod geometry;
pub mod incidence;
pub mod partition;

pub use error::{Error, Result};
