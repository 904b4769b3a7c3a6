use thiserror::Error;
use torus_core::CoreError;

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("epsilon must be positive, got {0}")]
    InvalidEpsilon(String),

    #[error("alpha must lie in [0, 1], got {0}")]
    InvalidAlpha(String),

    #[error("amplifier order k must be >= 1")]
    InvalidAmplifierOrder,

    #[error("polynomial is not {{0,1}}-valued at x = {x:#b} (value {value})")]
    RangeViolation { x: u64, value: u64 },

    #[error("required modulus p^k = {modulus} exceeds the fast-arithmetic cap 2^62")]
    ModulusTooLarge { modulus: String },

    #[error("sampling failed: disagreement check exceeded 2*eps*m after {attempts} attempts")]
    SamplingFailed { attempts: u32 },

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("certificate violation at x = {x:#b}: error term {error} exceeds 2^(k-e) = {bound}")]
    CertificateViolation {
        x: u64,
        error: String,
        bound: String,
    },

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("weight {w} out of range 0..={n}")]
    WeightOutOfRange { w: usize, n: usize },

    #[error("internal guarantee check failed: {0}")]
    GuaranteeFailed(String),
}

pub type Result<T> = std::result::Result<T, ConstructionError>;
