use thiserror::Error;

/// Errors raised by the realization and checking routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input could not be parsed into a rational, sequence or tournament.
    #[error("parse error: {0}")]
    Parse(String),

    /// A value violates a structural invariant (unsorted scores, bad weights, ...).
    #[error("invalid input: {0}")]
    Invalid(String),

    /// Condition I or II (or another feasibility precondition) does not hold.
    #[error("condition violation: {0}")]
    ConditionViolation(String),

    #[error("non-integral value: {0}")]
    NonIntegral(String),

    /// A search would exceed its configured size cap.
    #[error("resource limit: {what} has size {size}, cap is {cap}")]
    ResourceLimit {
        what: &'static str,
        size: String,
        cap: usize,
    },

    /// A search that is guaranteed to succeed found nothing.
    #[error("search exhausted without a solution: {0}")]
    SearchExhausted(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("empty interval ({lo}, {hi})")]
    EmptyInterval { lo: String, hi: String },

    /// A checked invariant failed after construction. Always a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
