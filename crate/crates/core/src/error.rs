use thiserror::Error;

/// Errors produced by the group, G-set and Burnside-ring routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("permutation degree must be positive")]
    ZeroDegree,

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("group too large: more than {limit} elements")]
    GroupTooLarge { limit: usize },

    #[error("not a subgroup of the given group")]
    NotASubgroup,

    #[error("subgroup containment required: {0}")]
    NotContained(&'static str),

    #[error("operands belong to different groups")]
    GroupMismatch,

    #[error("generator images do not extend to a homomorphism")]
    NotAHomomorphism,

    #[error("not a group action: {0}")]
    InvalidAction(String),

    #[error("class index {index} out of range (basis has {len} classes)")]
    ClassIndexOutOfRange { index: usize, len: usize },

    #[error("vector has length {found}, basis has {expected} classes")]
    LengthMismatch { expected: usize, found: usize },

    #[error("operation requires a proper subgroup")]
    ProperSubgroupRequired,

    #[error("permutation pair does not act transitively")]
    NotTransitive,

    #[error("invalid block sequence: {0}")]
    InvalidBlockSequence(String),

    #[error("index {n} outside supported range {}", range_text(*.min, *.max))]
    IndexOutOfRange { n: usize, min: usize, max: usize },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

fn range_text(min: usize, max: usize) -> String {
    if max == usize::MAX {
        format!("{min}..")
    } else {
        format!("{min}..={max}")
    }
}

/// A syntax error with a 1-based column inside the parsed string.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: {message}")]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(column: usize, message: impl Into<String>) -> Self {
        ParseError {
            column,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
