use thiserror::Error;

/// Precondition failures raised by the exact kernels and the checks built on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("{0}: zero polynomial not allowed")]
    ZeroPolynomial(&'static str),
    #[error("{0}: constant polynomial has no roots")]
    ConstantPolynomial(&'static str),
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix entries: expected {expected}, got {got}")]
    ShapeMismatch { expected: usize, got: usize },
    #[error("invalid minor indices: {0}")]
    BadMinorIndex(String),
    #[error("invalid index set: {0}")]
    InvalidIndexSet(String),
    #[error("segment start must be at least 1, got {0}")]
    SegmentStart(u64),
    #[error("operation requires a non-empty index set")]
    EmptySet,
    #[error("n = {n} is below u_F = {u}")]
    BelowSpectrumOffset { n: i64, u: i64 },
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
