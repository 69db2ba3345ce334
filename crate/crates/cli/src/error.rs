//! CLI-level errors and their mapping to process exit codes.

use signed_paradox::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}:{line}: {message}")]
    Structural { path: String, line: usize, message: String },

    #[error("{path}: {message}")]
    BadInput { path: String, message: String },

    #[error("{context}: {source}")]
    Core {
        context: String,
        #[source]
        source: CoreError,
    },

    #[error("input has {n} nodes; oracle mode is capped at {cap}")]
    OracleSizeCap { n: usize, cap: usize },

    #[error("{failures} oracle residuals above tolerance")]
    OracleFailure { failures: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

impl CliError {
    pub fn core(context: impl Into<String>, source: CoreError) -> Self {
        CliError::Core { context: context.into(), source }
    }

    /// Exit codes: 2 structural input problems, 3 empty sign worlds,
    /// 4 oracle residual failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core { source: CoreError::EmptyWorld { .. }, .. } => 3,
            CliError::OracleFailure { .. } => 4,
            _ => 2,
        }
    }
}
