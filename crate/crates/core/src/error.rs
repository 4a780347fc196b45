//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by the algebraic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Inputs live over different fields or different numbers of variables.
    #[error("configuration mismatch: {0}")]
    Config(String),
    /// An argument is outside the documented domain of an operation.
    #[error("invalid argument: {0}")]
    Argument(String),
    /// Vectors handed to a span computation do not share one degree.
    #[error("mixed degrees: expected {expected}, found {found}")]
    MixedDegrees { expected: i64, found: i64 },
    /// The t-parameters are undefined because the pure-power coefficient sum vanishes.
    #[error("t undefined: the coefficient sum of type ({d}) vanishes")]
    TUndefined { d: usize },
    /// The family handed to `linear_relations` is linearly dependent.
    #[error("dependent family: rank {rank} < {len}")]
    Dependent { rank: usize, len: usize },
    /// The quotient did not reach zero within the configured degree cap.
    #[error("possibly non-artinian: Hilbert function nonzero at degree cap {cap}")]
    NonArtinian { cap: usize },
    /// Matrices supplied for a module do not satisfy the module axioms.
    #[error("validation failed: {0}")]
    Validation(String),
    /// A class function failed to decompose into irreducibles with nonnegative integer weights.
    #[error("not a character: {0}")]
    NotACharacter(String),
    /// A computation would exceed its configured size budget.
    #[error("resource limit: {0}")]
    Resource(String),
    /// Text or JSON input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
