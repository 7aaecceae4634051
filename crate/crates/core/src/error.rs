//! Error type shared by every module of the workbench.
//!
//! The variants map onto process exit codes in the CLI crate: input problems,
//! partition build failures, genericity failures, and internal invariant
//! breaches are kept distinct so callers can react differently to each.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: bad file syntax, dimension mismatch, unknown config
    /// key, out-of-range parameter.
    #[error("input error: {0}")]
    Input(String),

    /// The requested operation needs a representation the object does not
    /// carry (e.g. an intersection count for two purely parametric curves).
    #[error("unsupported representation: {0}")]
    Unsupported(String),

    /// A restriction came out identically zero: the curve lies inside the
    /// variety it was restricted to. Callers treat this as a signal, not a
    /// failure.
    #[error("zero restriction: curve is contained in the zero set")]
    ZeroRestriction,

    /// Two curves share a component (or are identical), so their intersection
    /// count is not finite.
    #[error("common component: {0}")]
    CommonComponent(String),

    /// The bisection search exhausted its retry budget without certifying a
    /// balanced factor.
    #[error("partition failure: {0}")]
    PartitionFailure(String),

    /// No projection direction passed the genericity certificate within the
    /// retry budget.
    #[error("genericity failure: {0}")]
    GenericityFailure(String),

    /// Constant fitting was asked to fit degenerate (all-zero) samples.
    #[error("fit undefined: {0}")]
    FitUndefined(String),

    /// An internal invariant failed to hold; always a bug, never user error.
    #[error("invariant breach: {0}")]
    InvariantBreach(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}
