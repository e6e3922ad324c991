use thiserror::Error;

/// Errors raised by the library.
///
/// [`Error::Internal`] marks a violated invariant (two independent routes
/// disagreeing); every other variant is a problem with the caller's input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix rows have unequal lengths")]
    Ragged,

    #[error("negative exponent {value} in exponent vector")]
    NegativeExponent { value: String },

    #[error("exponent is not an integer: {value}")]
    NonIntegerExponent { value: String },

    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,

    #[error("ideals live in different rings")]
    RingMismatch,

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("power must be at least 1, got {0}")]
    InvalidPower(u64),

    #[error("parse error at position {position} near `{token}`: {message}")]
    Parse {
        position: usize,
        token: String,
        message: String,
    },

    #[error("variable `{0}` already exists in the ring")]
    NameCollision(String),

    #[error("candidate is not contained in the ideal: generator {0} is not a multiple of any generator")]
    NotContained(String),

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("polyhedron has no vertices")]
    NoVertices,

    #[error("polyhedron contains a line; only pointed polyhedra have a vertex representation")]
    NotPointed,

    #[error("H- and V-representation do not describe the same polyhedron: {0}")]
    Inconsistent(String),

    #[error("input too large for exhaustive enumeration: {0}")]
    TooLarge(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
