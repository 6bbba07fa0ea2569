use std::path::PathBuf;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A domain descriptor violated a structural invariant (zero measure,
    /// wrong dimension, degenerate polygon, ...).
    #[error("invalid domain: {0}")]
    InvalidDomain(String),

    /// Parameters fall outside the admissible region of the requested bound.
    /// The message names the violated constraint.
    #[error("parameter region violation: {0}")]
    RegionViolation(String),

    /// A scalar input was out of range (negative radius, ell outside (0,1], ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Two spectra passed to a comparison do not match (length or domain).
    #[error("spectrum mismatch: {0}")]
    SpectrumMismatch(String),

    /// An iterative solver ran out of iterations.
    #[error("no convergence: {0}")]
    NoConvergence(String),

    #[error("i/o error at {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
