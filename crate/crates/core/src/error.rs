use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("grid shape must have m >= 2 and n >= 2, got m={m}, n={n}")]
    InvalidShape { m: usize, n: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("index ({i}, {j}) out of range for {what}")]
    IndexOutOfRange { what: &'static str, i: usize, j: usize },

    #[error("value {value} at {location} is not a valid {field} element")]
    InvalidValue { field: &'static str, location: String, value: i64 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("invalid field `{field}`: {message}")]
    Format { field: String, message: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error(
        "shape {m}x{n} has a side divisible by 3; the torus class formulas need 3 to be invertible modulo both sides"
    )]
    DivisibleByThree { m: usize, n: usize },

    #[error("no admissible extension exists: boundary parity is 1")]
    OddBoundary,

    #[error("search space of 2^{log2} exceeds the size guard of 2^{limit}")]
    SizeGuard { log2: u32, limit: u32 },

    #[error("every weight of {0} must be nonzero")]
    ZeroWeight(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse { line: e.line(), column: e.column(), message: e.to_string() }
    }
}
