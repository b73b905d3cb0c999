use thiserror::Error;

use crate::scalar::Field;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },
    #[error("kind mismatch: expected {expected}, found {found}")]
    KindMismatch { expected: String, found: String },
    #[error("matrix is singular")]
    Singular,
    #[error("identity check failed: {0}")]
    IdentityFailure(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),
    #[error("not an idempotent: {0}")]
    NotIdempotent(String),
    #[error("algebra is nil (no nonzero idempotent)")]
    Nilalgebra,
    #[error("unsupported cohomology degree {0}")]
    UnsupportedDegree(usize),
    #[error("search bound exceeded: {0}")]
    SearchBound(String),
    #[error("independent computations disagree: {0}")]
    Inconsistent(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
