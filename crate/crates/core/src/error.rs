use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("negative argument {0} to factorial")]
    NegativeFactorial(i64),
    #[error("double factorial requires m >= -1, got {0}")]
    DoubleFactorialDomain(i64),
    #[error("n must be odd (> 1), got {0}")]
    EvenDimension(usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("dimension {0} exceeds the supported maximum of {max}", max = crate::clifford::MAX_DIMENSION)]
    DimensionTooLarge(usize),
    #[error("omega is undefined for the zero vector")]
    ZeroVector,
    #[error("parity violation: {0}")]
    Parity(&'static str),
    #[error("no normalization possible: tau_{n}[z^{k}] vanishes identically (k < n-1)")]
    VanishingMonomial { n: usize, k: usize },
    #[error("alpha must be nonzero")]
    ZeroAlpha,
    #[error("invalid lower parameter {0}: nonpositive integer")]
    InvalidLowerParameter(String),
    #[error("hypergeometric series did not reach tolerance {tolerance:e} within {max_terms} terms")]
    ToleranceNotReached { tolerance: f64, max_terms: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
