use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("order mismatch: expected {expected}, found {found}")]
    OrderMismatch { expected: usize, found: usize },

    #[error("letter {letter} is outside the alphabet 1..={dim}")]
    LetterOutOfRange { letter: usize, dim: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("word {0} is not a Lyndon word")]
    NotLyndon(String),

    #[error("invalid flattening split: {0}")]
    InvalidSplit(String),

    /// A requested degree exceeds a hard resource guard.
    #[error("degree {requested} exceeds the supported maximum {max}")]
    ResourceLimit { requested: usize, max: usize },

    /// The input is outside the hypothesis of the operation.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// An internal correctness tripwire fired. Always a bug.
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}
