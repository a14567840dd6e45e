use thiserror::Error;

use crate::ingest::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("interaction matrix is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },

    #[error("interaction matrix has nonzero diagonal at {0}")]
    NonZeroDiagonal(usize),

    #[error("non-finite coefficient at {0}")]
    NonFinite(usize),

    #[error("degenerate model: all interactions and biases are zero")]
    DegenerateModel,

    #[error("spin {index} has value {value}, expected 0 or 1")]
    InvalidSpin { index: usize, value: u8 },

    #[error("mf-spin {index} has value {value}, outside [0, 1]")]
    OutOfUnitInterval { index: usize, value: f64 },

    #[error("boundary gradient undefined: mf-spin {0} is at 0 or 1")]
    BoundaryGradient(usize),

    #[error("model has {n} spins; exhaustive enumeration is capped at {max}")]
    TooManySpins { n: usize, max: usize },

    #[error("step {t} outside schedule range 1..={n_step}")]
    StepOutOfRange { t: usize, n_step: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("accuracy undefined for a best known solution of zero")]
    UndefinedAccuracy,

    #[error(transparent)]
    Parse(#[from] ParseError),
}
