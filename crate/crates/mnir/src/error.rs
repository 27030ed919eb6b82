//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by corpus ingestion, model fitting, and simulation.
#[derive(Debug, Error)]
pub enum MnirError {
    /// A file could not be read or written.
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    /// A corpus, response, or config file failed to parse.
    #[error("parse error at {path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },

    /// Structural problem in a corpus (bounds, duplicates, zero totals).
    #[error("invalid corpus: {0}")]
    InvalidCorpus(String),

    /// Bad argument or configuration value.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// Operand shapes do not line up.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Responses are all zero or all one, so group-wise collapsing is undefined.
    #[error("degenerate grouping: {0}")]
    DegenerateGrouping(String),

    /// A coordinate carries no information (e.g. zero probability off baseline).
    #[error("unidentifiable coordinate: {0}")]
    Unidentifiable(String),

    /// Projections are constant, so the forward regression is undefined.
    #[error("degenerate projection: {0}")]
    DegenerateProjection(String),

    /// An optimizer or Monte Carlo run failed numerically.
    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl MnirError {
    /// Exit code contract: 2 for input errors, 1 for numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            MnirError::Io { .. }
            | MnirError::Parse { .. }
            | MnirError::InvalidCorpus(_)
            | MnirError::Invalid(_)
            | MnirError::DimensionMismatch(_) => 2,
            MnirError::DegenerateGrouping(_)
            | MnirError::Unidentifiable(_)
            | MnirError::DegenerateProjection(_)
            | MnirError::Numerical(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, MnirError>;
