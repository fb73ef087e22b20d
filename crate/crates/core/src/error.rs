//! Error type shared by every module of the engine.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Failures raised by the engine.
///
/// Undefined partial operations on intervals are *data* (`Option::None`), not
/// errors; the variants below signal misuse, malformed input, or a broken
/// structural invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Invalid configuration (unknown variant, bad grid, inconsistent orders).
    #[error("configuration error: {0}")]
    Config(String),

    /// Syntax error in an expression, with the byte offset where it occurred.
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// An interval endpoint that is not a breakpoint of the active grid.
    #[error("off-grid endpoint: {0}")]
    OffGrid(String),

    /// A generator kind that the active presentation does not provide.
    #[error("generator {kind} is not available in presentation {presentation}")]
    UnknownGenerator { kind: String, presentation: String },

    /// The rewrite budget was exhausted; carries the word being reduced.
    #[error("rewriting did not terminate within {fuel} steps (word {word})")]
    FuelExhausted { fuel: usize, word: String },

    /// A broken structural invariant (e.g. a non-invertible grouplike).
    #[error("structural error: {0}")]
    Structural(String),

    /// A coefficient with a pole at q = 1 where an integral value was required.
    #[error("valuation error: {0}")]
    Valuation(String),

    /// A division by (q - 1) or by h that is not exact.
    #[error("divisibility error: {0}")]
    Divisibility(String),

    /// Input outside the domain of an operation (e.g. mixed Borel arguments).
    #[error("domain error: {0}")]
    Domain(String),
}
