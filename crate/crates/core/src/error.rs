use thiserror::Error;

/// Errors raised anywhere in the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("ring dimension mismatch: {left} vs {right}")]
    RingMismatch { left: usize, right: usize },

    #[error("variable index {index} out of range for a ring in {ring_dim} variables")]
    VariableOutOfRange { index: usize, ring_dim: usize },

    #[error("invalid ring context: {0}")]
    InvalidContext(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("generator {0} is not homogeneous")]
    NotHomogeneous(usize),

    #[error("quotient ring is not Artinian (not finite-dimensional)")]
    NotArtinian,

    #[error("resource ceiling exceeded: {0}")]
    ResourceCeiling(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
