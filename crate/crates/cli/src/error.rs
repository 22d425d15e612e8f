use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] halfwall_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 2 for anything the caller got wrong, 1 otherwise. A failed check is
    /// not an error and never reaches here.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(halfwall_core::Error::Numerical(_))
            | CliError::Core(halfwall_core::Error::DegenerateDecomposition)
            | CliError::Io(_)
            | CliError::Csv(_)
            | CliError::Json(_) => 1,
            CliError::Core(_) | CliError::Usage(_) => 2,
        }
    }
}
