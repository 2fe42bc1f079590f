use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A line of an edge list did not hold exactly two labels. Lines are 1-based.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph has no nodes")]
    EmptyGraph,
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("matching is not maximum: an augmenting path exists")]
    NotMaximum,
    #[error("node universes differ: {0} vs {1} nodes")]
    UniverseMismatch(usize, usize),
}
