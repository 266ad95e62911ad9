use thiserror::Error;

/// Failures that stop a run before any report is produced. All map to exit
/// code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("config: {0}")]
    Config(String),
}

impl From<surfrr_core::Error> for CliError {
    fn from(e: surfrr_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
