use thiserror::Error;

/// Failure of a CLI invocation, mapped onto the process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] thermolength::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Core(e) if e.is_numerical() => exit::NUMERICAL,
            CliError::Core(_) => exit::DOMAIN,
        }
    }
}

pub mod exit {
    pub const SUCCESS: u8 = 0;
    pub const USAGE: u8 = 1;
    pub const DOMAIN: u8 = 2;
    pub const NUMERICAL: u8 = 3;
}

pub type CliResult<T> = std::result::Result<T, CliError>;
