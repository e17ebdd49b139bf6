use crate::scalar::FieldError;

/// Errors shared across the crate.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),

    #[error("index pair ({m},{n}) lies outside the table window [-{half_width},{half_width}]")]
    OutOfWindow { m: i64, n: i64, half_width: i64 },

    #[error("closed-form denominator vanishes at ({m},{n})")]
    Pole { m: i64, n: i64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid basis index {index}: {reason}")]
    InvalidIndex { index: i64, reason: String },

    #[error("cocycle table has no entry for ({m},{n})")]
    MissingCocycleEntry { m: i64, n: i64 },

    #[error("scaling coefficient at index {0} is zero or missing")]
    BadScaling(i64),

    #[error("operation requires the concrete Q(i) field mode")]
    SymbolicUnsupported,

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
