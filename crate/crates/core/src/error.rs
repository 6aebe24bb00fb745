use thiserror::Error;

/// Errors raised by exact scalar and matrix arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("backend mismatch: {0} vs {1}")]
    BackendMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("matrix dimension {0} outside supported range 1..=8")]
    UnsupportedDimension(usize),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("assignment is missing variable `{0}`")]
    MissingVariable(String),
    #[error("denominator vanishes under the assignment")]
    VanishingDenominator,
    #[error("variable `{0}` occurs with an odd exponent")]
    OddExponent(String),
    #[error("modulus must be monic of degree >= 1")]
    InvalidModulus,
    #[error("element is not invertible modulo {0} (is the modulus irreducible?)")]
    NotInvertible(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid variable context: {0}")]
    InvalidContext(String),
}

/// Errors raised while constructing or checking representations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("constraint violated: {0}")]
    Constraint(String),
    #[error("zero eigenvalue at position {0}")]
    ZeroEigenvalue(usize),
    #[error("braid relation ABA = BAB fails")]
    BraidRelationFails,
    #[error("index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("{0}")]
    Unsupported(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("malformed representation JSON: {0}")]
    Json(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
