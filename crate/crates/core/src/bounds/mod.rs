//! Bound evaluators, admissibility predicates, and fitting utilities for
//! incidence counts.

pub mod holder;

pub use holder::{alphas_for, holder_check, HOLDER_REL_TOL};
