//! Error-to-exit-code mapping: 1 = verification failure, 2 = usage or input
//! error, 3 = a configured size cap was exceeded.

use constructions::ConstructionError;
use degree_oracle::OracleError;
use torus_core::CoreError;

#[derive(Debug)]
pub enum CliError {
    /// a recomputed guarantee did not hold, or the requested bound was missed
    Verification(String),
    /// bad flags, malformed files, dimension mismatches
    Usage(String),
    /// instance larger than a configured cap
    SizeLimit(String),
}

pub type Result<T> = std::result::Result<T, CliError>;

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Usage(_) => 2,
            CliError::SizeLimit(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Verification(m) => write!(f, "verification failure: {m}"),
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::SizeLimit(m) => write!(f, "size limit exceeded: {m}"),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<ConstructionError> for CliError {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::ModulusTooLarge { .. } => CliError::SizeLimit(e.to_string()),
            ConstructionError::GuaranteeFailed(_)
            | ConstructionError::SamplingFailed { .. }
            | ConstructionError::CertificateViolation { .. } => {
                CliError::Verification(e.to_string())
            }
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::SizeLimitExceeded(_) => CliError::SizeLimit(e.to_string()),
            OracleError::GuaranteeFailed(_) | OracleError::NotFoundWithin { .. } => {
                CliError::Verification(e.to_string())
            }
            other => CliError::Usage(other.to_string()),
        }
    }
}
