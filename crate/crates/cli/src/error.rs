use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments or unparsable input.
    #[error("{0}")]
    Usage(String),
    /// A path that cannot be read or written.
    #[error("{0}")]
    Io(String),
    /// A cache file that disagrees with itself or with computed values.
    #[error("{0}")]
    Integrity(String),
    /// An internal consistency check in the core failed.
    #[error("{0}")]
    Core(#[from] hodgerec_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Integrity(_) | CliError::Core(_) => 1,
        }
    }
}
