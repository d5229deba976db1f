use thiserror::Error;

/// Errors raised across the toolkit.
///
/// The variants map onto the command-line exit codes: usage-type failures
/// exit with 2, consistency failures with 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("not weighted homogeneous: {0}")]
    NotWeightedHomogeneous(String),
    #[error("weights not unique: {0}")]
    WeightsNotUnique(String),
    #[error("non-isolated singularity: {0}")]
    NonIsolated(String),
    #[error("internal consistency error in {check}: {detail}")]
    Internal { check: String, detail: String },
}

impl Error {
    pub(crate) fn internal(check: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Internal {
            check: check.into(),
            detail: detail.into(),
        }
    }

    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    /// Process exit code for this error.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Internal { .. } | Error::DivisionByZero => 3,
            _ => 2,
        }
    }

    /// Re-tag an error with the verification stage it occurred in.
    pub fn in_check(self, check: &str) -> Self {
        match self {
            Error::Internal { check: inner, detail } => Error::Internal {
                check: format!("{check}/{inner}"),
                detail,
            },
            other => Error::Internal {
                check: check.to_string(),
                detail: other.to_string(),
            },
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
