use thiserror::Error;

/// Errors raised by the library. Parse errors carry the 1-based line and the
/// offending token so the CLI can report them verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index {index} out of range for rank {rank}")]
    Rank { index: usize, rank: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("parse error at line {line}, token `{token}`: {reason}")]
    Parse { line: usize, token: String, reason: String },

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("tree has no root vertex")]
    MissingRoot,

    #[error("invalid quadrangulation: {0}")]
    InvalidQuadrangulation(String),

    #[error("quadrangulation is not monotone")]
    NotMonotone,

    #[error("invalid covering: {0}")]
    InvalidCovering(String),

    #[error("resource guard exceeded: {0}")]
    Guard(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            line,
            token: token.into(),
            reason: reason.into(),
        }
    }
}
