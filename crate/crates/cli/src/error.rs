use std::path::PathBuf;

use fn3_core::Error as CoreError;

/// Failures of a command, grouped by exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}:{line}:{column}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid input: {0}")]
    Input(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("suite `{0}` failed")]
    SuiteFailed(String),
}

impl CliError {
    /// 1 = failed verification, 2 = bad input, 3 = mathematical
    /// precondition, 4 = numerical convergence.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::SuiteFailed(_) => 1,
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Input(_) | CliError::UnknownSuite(_) => 2,
            CliError::Core(e) => core_exit_code(e),
        }
    }

    pub fn parse(path: &std::path::Path, e: serde_json::Error) -> Self {
        CliError::Parse {
            path: path.to_path_buf(),
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

pub fn core_exit_code(e: &CoreError) -> i32 {
    match e {
        CoreError::Pants { source, .. } => core_exit_code(source),
        CoreError::InvalidDecomposition(_) | CoreError::UnknownGenerator(_) | CoreError::NonUnimodular(_) => 2,
        CoreError::NoConvergence { .. }
        | CoreError::RootChoiceUnrealizable
        | CoreError::GaugeDegenerate
        | CoreError::RelationResidual(_)
        | CoreError::IllConditioned(_) => 4,
        _ => 3,
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
