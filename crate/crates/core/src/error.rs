use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Lie type `{token}`: {reason}")]
    InvalidType { token: String, reason: String },

    #[error("vector {vector:?} has length {actual}, expected rank {expected}")]
    LengthMismatch {
        vector: Vec<i64>,
        expected: usize,
        actual: usize,
    },

    #[error("{0:?} is not a root of {1}")]
    NotARoot(Vec<i64>, String),

    #[error("crossed node {index} is out of range 1..={rank}")]
    CrossedOutOfRange { index: usize, rank: usize },

    #[error("{root:?} is not an omitted root; omitted roots are {omitted}")]
    NotOmitted { root: Vec<i64>, omitted: String },

    #[error("parabolic has no omitted roots (P = G)")]
    NoOmittedRoots,

    #[error("malformed model `{token}`: {reason}")]
    MalformedModel { token: String, reason: String },

    #[error("index error: {0}")]
    IndexOutOfRange(String),

    #[error("invalid string representation: {0}")]
    InvalidRep(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
