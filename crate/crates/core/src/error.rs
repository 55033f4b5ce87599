//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid uniform range: lo {lo} > hi {hi}")]
    InvalidRange { lo: f64, hi: f64 },

    #[error("invalid standard deviation {0}: must be finite and nonnegative")]
    InvalidSigma(f64),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("non-finite component at index {index}: {value}")]
    NonFiniteInput { index: usize, value: f64 },

    #[error("unknown benchmark function id {0} (valid ids are 1-12)")]
    UnknownFunction(u32),

    #[error("population of {0} agents is too small: at least 3 are required")]
    PopulationTooSmall(usize),

    #[error("iteration {t} is outside 0..={max}")]
    IterationOutOfRange { t: usize, max: usize },

    #[error("degenerate distribution: support has zero width")]
    DegenerateDistribution,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("empty sample set")]
    EmptySamples,

    #[error("results table: {0}")]
    Table(String),
}

pub type Result<T> = std::result::Result<T, Error>;
