use thiserror::Error;

/// Errors raised by the library.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown generator `{token}`")]
    UnknownGenerator { token: String },
    #[error("unknown family `{token}`")]
    UnknownFamily { token: String },
    #[error("{family} requires rank >= {min}, got {rank}")]
    RankOutOfRange {
        family: String,
        rank: usize,
        min: usize,
    },
    #[error("unsupported Coxeter matrix entry {entry}")]
    UnsupportedEntry { entry: String },
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("state cap of {cap} exceeded")]
    CapExceeded { cap: usize },
    #[error("word `{word}` is not reduced")]
    NotReduced { word: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("no word-level classifier for family {family}")]
    ClassifierUnavailable { family: String },
    #[error("polynomial part of {family} is unresolved")]
    Unresolved { family: String },
    #[error("inconclusive: need at least {needed} coefficients, got {got}")]
    Inconclusive { needed: usize, got: usize },
    #[error("inconsistent: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
