use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("integer overflow in coefficient arithmetic")]
    Overflow,

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("polynomial is not symmetric in its {0} variables")]
    NotSymmetric(usize),

    #[error("triangular expansion left a nonzero residual")]
    Residual,

    #[error("index {index} out of range (need 1 < i < {size})")]
    IndexRange { index: usize, size: usize },

    /// A cross-check between two independent computations disagreed, or a
    /// propagation revisited an object with a different image.
    #[error("inconsistent result: {0}")]
    Inconsistent(String),

    #[error("negative coefficient where positivity is guaranteed: {0}")]
    Negative(String),
}

pub type Result<T> = std::result::Result<T, Error>;
