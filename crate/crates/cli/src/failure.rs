use ncs_core::analysis::AnalysisError;
use ncs_core::format::FormatError;
use ncs_core::platform::PlatformFileError;
use ncs_core::protocols::files::FileError;
use ncs_core::protocols::ProtocolError;
use ncs_core::GroupError;

/// A failed command, classified by exit code.
#[derive(Debug, thiserror::Error)]
pub enum Failure {
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Malformed(String),
    #[error("{0}")]
    Retry(String),
    #[error("reject")]
    Reject,
    #[error("{0}")]
    NotFound(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => 1,
            Failure::Malformed(_) => 2,
            Failure::Retry(_) => 3,
            Failure::Reject => 4,
            Failure::NotFound(_) => 5,
        }
    }

    pub fn malformed(msg: impl Into<String>) -> Self {
        Failure::Malformed(msg.into())
    }
}

impl From<ProtocolError> for Failure {
    fn from(e: ProtocolError) -> Self {
        match e {
            ProtocolError::RetryExhausted(_) => Failure::Retry(e.to_string()),
            ProtocolError::NotFound { .. } => Failure::NotFound(e.to_string()),
            _ => Failure::Malformed(e.to_string()),
        }
    }
}

impl From<FileError> for Failure {
    fn from(e: FileError) -> Self {
        match e {
            FileError::Params(p) => p.into(),
            other => Failure::Malformed(other.to_string()),
        }
    }
}

impl From<PlatformFileError> for Failure {
    fn from(e: PlatformFileError) -> Self {
        match e {
            PlatformFileError::Io { .. } => Failure::Io(e.to_string()),
            other => Failure::Malformed(other.to_string()),
        }
    }
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        Failure::Malformed(e.to_string())
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Malformed(e.to_string())
    }
}

impl From<AnalysisError> for Failure {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::StateBudget(_) => Failure::NotFound(e.to_string()),
            other => Failure::Malformed(other.to_string()),
        }
    }
}
