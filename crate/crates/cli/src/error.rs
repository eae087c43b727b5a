use std::path::PathBuf;

use thiserror::Error;

/// Exit status for user errors: bad input, bad flags, unreadable files.
pub const EXIT_USER: u8 = 2;
/// Exit status for a violated internal invariant or a failed oracle.
pub const EXIT_INTERNAL: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    /// Schema violations, each prefixed with a JSON pointer.
    #[error("invalid system file:\n  {}", .0.join("\n  "))]
    Schema(Vec<String>),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] conley_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(conley_core::Error::Invariant(_)) => EXIT_INTERNAL,
            _ => EXIT_USER,
        }
    }
}
