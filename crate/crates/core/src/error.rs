//! Error type shared across the crate.

use thiserror::Error;

/// Errors raised by constructors, bijections and counters.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid skew shape: {0}")]
    InvalidShape(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid class spec: {0}")]
    InvalidClassSpec(String),

    #[error("permutation has length {got} but the class requires length {want}")]
    LengthMismatch { want: usize, got: usize },

    #[error("permutation is not a member of the class: {0}")]
    NotInClass(String),

    #[error("input contains the forbidden pattern {0}")]
    PatternContained(String),

    #[error("shape is not basic (its rows are not a connected corner chain); apply normalize_shape first")]
    NonBasicShape,

    #[error("enumeration refused: shape has {boxes} boxes, exceeding the configured bound of {bound}")]
    BoundExceeded { boxes: usize, bound: usize },

    #[error("tableau shapes do not match")]
    ShapeMismatch,

    #[error("duplicate value {0} in insertion")]
    DuplicateValue(usize),

    #[error("malformed good tableau: {0}")]
    BadGoodTableau(String),

    #[error("unsupported operation: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
