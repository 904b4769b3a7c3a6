use thiserror::Error;
use torus_core::CoreError;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("problem size exceeds configured caps: {0}")]
    SizeLimitExceeded(String),

    #[error("no degree up to {d_max} is feasible")]
    NotFoundWithin { d_max: usize },

    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    #[error("internal guarantee check failed: {0}")]
    GuaranteeFailed(String),
}

pub type Result<T> = std::result::Result<T, OracleError>;
