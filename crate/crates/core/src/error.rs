//! Shared error type for the exact-arithmetic stack.

use thiserror::Error;

/// Parse failure with the byte offset of the offending token.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(pos: usize, msg: impl Into<String>) -> Self {
        ParseError {
            pos,
            msg: msg.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator set")]
    EmptySet,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("ambient dimension must be at least 1")]
    InvalidDimension,

    #[error("the zero ideal is not permitted")]
    ZeroIdeal,

    #[error("the zero polynomial is not permitted here")]
    ZeroPolynomial,

    #[error("depth parameter must be positive, got {0}")]
    InvalidDepth(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("computation limit exceeded while {what}: {count} > cap {cap}")]
    ComputationLimit {
        what: String,
        count: usize,
        cap: usize,
    },

    #[error("no separating facet: the query point violates the precondition")]
    NotSeparable,

    #[error("exponent is not in the integral closure")]
    NotInClosure,

    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
