//! File formats, CSV output and subcommand implementations behind the `ebell`
//! binary.

pub mod commands;
pub mod formats;

use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Model(#[from] entropic_bell::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// 1 for anything wrong with the input, 2 for I/O failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) | CliError::Model(_) => 1,
            CliError::Io { .. } => 2,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
