use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Error, Debug)]
pub enum AppError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid input:\n  {}", .0.join("\n  "))]
    Validation(Vec<String>),
    #[error("{path}: {message}")]
    Parse { path: String, message: String },
    #[error(transparent)]
    Core(#[from] owa_rank_core::Error),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
}

impl AppError {
    /// 0 success, 1 validation or usage failure, 2 I/O failure.
    pub fn exit_code(&self) -> u8 {
        match self {
            AppError::Io { .. } => 2,
            _ => 1,
        }
    }

    pub(crate) fn parse(path: impl Into<String>, message: impl ToString) -> Self {
        AppError::Parse {
            path: path.into(),
            message: message.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, AppError>;
