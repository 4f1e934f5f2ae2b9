use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid root system type {0}")]
    InvalidType(String),

    #[error("root {0} is not short")]
    NotShort(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("validation failed ({invariant}): {detail}")]
    Validation { invariant: String, detail: String },

    #[error("no basis class of degree 2")]
    MissingDegree2,

    #[error("algebra is not semisimple")]
    NotSemisimple,

    #[error("inconsistent constraints: {0}")]
    Inconsistent(String),

    #[error("radical shape mismatch: {0}")]
    RadicalShape(String),

    #[error("unknown class label {0}")]
    UnknownLabel(String),

    #[error("{0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn validation(invariant: &str, detail: impl Into<String>) -> Self {
        Error::Validation {
            invariant: invariant.to_string(),
            detail: detail.into(),
        }
    }
}
