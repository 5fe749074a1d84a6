use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Input {
        path: PathBuf,
        #[source]
        source: latticeforms::Error,
    },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Lib(#[from] latticeforms::Error),

    #[error("cannot write output: {0}")]
    Output(String),
}

pub type CliResult<T> = Result<T, CliError>;
