use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("not a plane partition: entry ({row},{col}) breaks monotonicity ({detail})")]
    InvalidPlanePartition {
        row: usize,
        col: usize,
        detail: String,
    },

    #[error("invalid essential profile: {0}")]
    InvalidEssentialProfile(String),

    #[error("invalid chain of floors: {0}")]
    InvalidChain(String),

    #[error("precision exceeded: {0}")]
    PrecisionExceeded(String),

    #[error("matrix is not an arc: no maximal minor is a unit")]
    NotAnArc,

    #[error("plane partition has infinite entries; not supported at finite precision")]
    UnsupportedAtFinitePrecision,

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
