//! CLI error classification and exit codes.

/// Exit codes: 0 success (any solve status), 2 parse, 3 dimension, 4 overflow.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("overflow error: {0}")]
    Overflow(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Io(_) => 2,
            CliError::Dimension(_) => 3,
            CliError::Overflow(_) => 4,
        }
    }
}

impl From<residua::Error> for CliError {
    fn from(err: residua::Error) -> Self {
        use residua::Error::*;
        match err {
            Overflow { .. } => CliError::Overflow(err.to_string()),
            DimensionMismatch { .. } | TagMismatch { .. } | ZeroDimension { .. }
            | EntryCount { .. } | RaggedRows { .. } => CliError::Dimension(err.to_string()),
            InvalidInterval { .. } | InvalidIterationLimit | InvalidGrid
            | EnumerationBudget { .. } | ParseScalar(_) | ParseTag(_) => {
                CliError::Parse(err.to_string())
            }
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(err: serde_json::Error) -> Self {
        CliError::Parse(err.to_string())
    }
}
