use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{context}: {source}")]
    Input {
        context: String,
        source: sigmaloci::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] sigmaloci::Error),
}

impl CliError {
    pub fn input(context: impl Into<String>) -> impl FnOnce(sigmaloci::Error) -> CliError {
        let context = context.into();
        move |source| CliError::Input { context, source }
    }

    /// 1 for failed internal cross-checks, 2 for everything the caller can fix.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Library(sigmaloci::Error::CrossCheck(_)) => 1,
            _ => 2,
        }
    }
}
