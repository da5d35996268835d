use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero quaternion")]
    ZeroDivisor,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("matrix is not Hermitian: {0}")]
    NotHermitian(String),
    #[error("Hermitian determinant has a nonzero imaginary part")]
    NonRealResult,
    #[error("matrix index is {found}, expected at most {expected}")]
    IndexMismatch { expected: usize, found: usize },
    #[error("square dimension {dim} exceeds the determinant cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("zero denominator in {0}; rank precondition violated")]
    ZeroDenominator(String),
    #[error("oracle self-check failed: {0}")]
    InternalOracleFailure(String),
    #[error("unknown equation system `{0}`")]
    UnknownSystem(String),
    #[error("variant `{variant}` does not apply to {operation}")]
    UnsupportedVariant { operation: String, variant: String },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
