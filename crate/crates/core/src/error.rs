use thiserror::Error;

use crate::band::Band;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// The denominator of a rational function vanishes at `t = 0`.
    #[error("rational function has a pole at t = 0")]
    PoleAtZero,

    #[error("band {band} has length {actual}, expected {expected}")]
    BadBandLength {
        band: Band,
        expected: usize,
        actual: usize,
    },

    #[error("order n = {n} is below the supported minimum {min}; use the dense oracle instead")]
    OrderTooSmall { n: usize, min: usize },

    #[error("index ({row}, {col}) is outside a matrix of order {n}")]
    IndexOutOfRange { row: usize, col: usize, n: usize },

    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },

    /// Float mode only: a pivot fell below the breakdown threshold.
    #[error("zero pivot at c_{index}")]
    ZeroPivot { index: usize },

    /// Float mode only: the fourth superdiagonal entry used as a divisor is zero.
    #[error("zero divisor at z_{index}")]
    ZeroSuperdiagonal { index: usize },

    #[error("singular matrix")]
    SingularMatrix,

    #[error("verification failed: (K * K^-1) differs from the identity at ({row}, {col})")]
    VerificationFailed { row: usize, col: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
