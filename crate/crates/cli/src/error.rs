use std::process::ExitCode;

use crate::catalog::CatalogError;

/// Failures surfaced by the CLI, each with a fixed exit code.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    /// Malformed or unknown input. Exit code 2.
    #[error("input error: {0}")]
    Input(String),
    /// A group, index or enumeration exceeded its cap. Exit code 3.
    #[error("resource cap: {0}")]
    Cap(String),
    /// A consistency check inside the library failed. Exit code 1.
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Internal(_) => 1,
        }
    }

    pub fn to_exit_code(&self) -> ExitCode {
        ExitCode::from(self.exit_code())
    }
}

impl From<pullbacklab::Error> for CliError {
    fn from(e: pullbacklab::Error) -> Self {
        use pullbacklab::Error as E;
        match e {
            E::GroupTooLarge { .. } => CliError::Cap(e.to_string()),
            E::IndexOutOfRange { n, max, .. } if n > max => CliError::Cap(e.to_string()),
            E::Internal(_) => CliError::Internal(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<CatalogError> for CliError {
    fn from(e: CatalogError) -> Self {
        CliError::Input(format!("catalog {e}"))
    }
}

impl From<pullbacklab::ParseError> for CliError {
    fn from(e: pullbacklab::ParseError) -> Self {
        CliError::Input(e.to_string())
    }
}
