use thiserror::Error;

/// Errors for fallible operations. Index bounds are contract violations and
/// panic instead; see the individual method docs.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid circular target ({p},{q}): requires p/q >= 2 and q >= 1")]
    InvalidTarget { p: usize, q: usize },

    #[error("circular target ({p},{q}) exceeds the supported modulus (p <= 64)")]
    TargetTooLarge { p: usize, q: usize },

    #[error("lower parents are undefined for (2,1)")]
    NoLowerParents,

    #[error("colouring uses all {p} colours; nothing to reduce")]
    SurjectiveColouring { p: usize },

    #[error("assignment is not a valid colouring for its target")]
    InvalidColouring,

    #[error("isomorphism test supports at most {max} vertices, got {n}")]
    IsomorphismTooLarge { n: usize, max: usize },

    #[error("instance too large for the brute-force oracle: {n} vertices at modulus {p}")]
    OracleTooLarge { n: usize, p: usize },

    #[error("invalid construction: {0}")]
    InvalidConstruction(String),

    #[error("invalid list assignment: {0}")]
    InvalidListAssignment(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
