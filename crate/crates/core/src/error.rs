use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported field exponent s={0} (supported: 1..=8)")]
    UnsupportedExponent(u32),

    #[error("attempted to invert zero")]
    ZeroInverse,

    #[error("invalid code parameter: {0}")]
    InvalidParameter(String),

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("shape mismatch: expected {expected_rows}x{expected_cols}, found {rows}x{cols}")]
    ShapeMismatch {
        expected_rows: usize,
        expected_cols: usize,
        rows: usize,
        cols: usize,
    },

    #[error("row encoder stream exhausted after {0} symbols")]
    StreamExhausted(usize),

    #[error("row encoder used out of order: {0}")]
    StreamOrder(&'static str),

    #[error("singular system: {0}")]
    Singular(&'static str),

    #[error("invalid schedule: {0}")]
    InvalidSchedule(String),

    #[error("malformed input: {0}")]
    Format(String),

    /// An algebraic invariant that the construction guarantees did not hold.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
