//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by the game primitives, engines and auditors.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("empty history: no rounds have been played")]
    EmptyHistory,

    #[error("desynchronized counts: row total {row} != column total {col}")]
    Desync { row: String, col: String },

    #[error("invalid construction parameters: {0}")]
    Construction(String),

    #[error("matrix fails structural validation: {0}")]
    Structure(String),

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    /// An argmax set is not a singleton, so closed-form advancing is not
    /// sound; the caller must fall back to naive stepping.
    #[error("tie state: argmax set is not a singleton ({0})")]
    TieState(String),

    /// The current profile is absorbing: no challenger can ever catch up and
    /// no horizon caps the stretch.
    #[error("absorbing profile {0}: no challenger catches up and no horizon given")]
    Absorbing(String),

    #[error("persistent tie at round {round}: {detail} (budget {budget} exhausted)")]
    PersistentTie {
        round: String,
        detail: String,
        budget: u64,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("missing data: {0}")]
    MissingData(String),

    /// A sampled profile contradicts the concentration lemma. This would
    /// falsify the construction's uniqueness guarantee and must surface.
    #[error("concentration lemma violated by {count} sample(s); first: {first}")]
    LemmaViolation { count: usize, first: String },

    #[error("usage error: {0}")]
    Usage(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
