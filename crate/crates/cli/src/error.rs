//! Error type of the command-line layer.

use thiserror::Error;

/// Result alias of the command-line layer.
pub type Result<T> = std::result::Result<T, CliError>;

/// Failures raised before or outside the verification checks.  Failures of
/// the checks themselves are recorded in the report, not raised.
#[derive(Debug, Error)]
pub enum CliError {
    /// Engine error: invalid configuration, malformed expression, …
    #[error(transparent)]
    Core(#[from] cqg_core::Error),

    /// A file could not be read or written.
    #[error("cannot access {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    /// The configuration document is not valid JSON for [`crate::RunConfig`].
    #[error("invalid configuration document: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// Whether the error concerns the configuration (as opposed to I/O).
    pub fn is_config(&self) -> bool {
        matches!(self, CliError::Json(_) | CliError::Core(cqg_core::Error::Config(_)))
    }
}
