use thiserror::Error;

/// Errors raised by the census library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("the zero class is not allowed here")]
    ZeroClass,

    #[error("class {0} is not primitive")]
    NotPrimitive(String),

    #[error("class {0} is not in the open cone over the face")]
    OutsideOpenCone(String),

    #[error("class {class} has odd norm {norm}; face even-integrality violated")]
    OddNorm { class: String, norm: i64 },

    #[error("degenerate specialization: all terms cancel along {0}")]
    DegenerateSpecialization(String),

    #[error("not a dilatation polynomial: {0}")]
    NotDilatation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{location}: {invariant}")]
    Validation { location: String, invariant: String },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("i/o error: {0}")]
    Io(String),

    #[error("invariant violated: {0}")]
    InvariantViolated(String),
}

impl Error {
    pub(crate) fn validation(location: impl Into<String>, invariant: impl Into<String>) -> Self {
        Error::Validation {
            location: location.into(),
            invariant: invariant.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
