use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A rank or degree exceeds what a computation route supports.
    #[error("{what}: size {requested} exceeds cap {cap}{}", hint.map(|h| format!(" ({h})")).unwrap_or_default())]
    Size {
        what: &'static str,
        requested: usize,
        cap: usize,
        hint: Option<&'static str>,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("mismatched truncation degrees {left} and {right}")]
    TruncationMismatch { left: usize, right: usize },

    /// An exact computation produced a value that must be impossible,
    /// e.g. a non-integral class average.
    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("malformed series document: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
