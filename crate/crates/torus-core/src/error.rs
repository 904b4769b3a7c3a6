use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("dimension mismatch: expected {expected} variables, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("function is not symmetric: f differs on two inputs of weight {weight}")]
    NotSymmetric { weight: usize },

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("invalid rational literal `{0}` (expected \"num/den\" with den > 0)")]
    ParseRational(String),

    #[error("malformed polynomial or function file: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
