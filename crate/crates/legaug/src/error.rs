//! Errors of the std front end.

use std::path::PathBuf;

use thiserror::Error;

/// Anything the command-line tool can fail with.
#[derive(Debug, Error)]
pub enum CliError {
    /// A failure reported by the core library.
    #[error(transparent)]
    Core(#[from] legaug_core::Error),
    /// An input file could not be read.
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    /// Malformed JSON input.
    #[error("bad JSON: {0}")]
    Json(#[from] serde_json::Error),
    /// Well-formed JSON with the wrong shape.
    #[error("bad {what}: {message}")]
    Format { what: &'static str, message: String },
    /// The command is not applicable to the given input.
    #[error("{0}")]
    Unsupported(String),
    /// The worker pool could not be built.
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

impl CliError {
    pub(crate) fn format(what: &'static str, message: impl Into<String>) -> Self {
        CliError::Format { what, message: message.into() }
    }
}
