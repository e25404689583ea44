use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by sequence construction, enumeration and verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequence must have at least one entry")]
    EmptySequence,

    #[error("nonpositive entry {value} at position {index} (entries must be >= 1)")]
    NonPositiveEntry { index: usize, value: BigInt },

    #[error("u-vector does not generate a positive sequence: s_{index} = {value}")]
    NotGenerating { index: usize, value: BigInt },

    #[error("dimension mismatch: expected {expected} coordinates, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("grading {0} needs a point of dimension at least 2")]
    GradingUndefined(&'static str),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("point {0} is not in the cone")]
    NotInCone(String),

    #[error("point {0} is not in the interior of the cone")]
    NotInterior(String),

    #[error("enumeration budget exceeded: fundamental box volume {volume} > {budget}")]
    BudgetExceeded { volume: BigInt, budget: BigInt },

    #[error("closed formula produced a non-integral value {0}")]
    NonIntegral(String),

    #[error("no cardinality formula for a custom sequence")]
    CustomFamily,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
