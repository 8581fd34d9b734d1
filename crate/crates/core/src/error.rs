use thiserror::Error;

/// Errors raised by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported field GF({p}^{m}): {reason}")]
    UnsupportedField { p: u32, m: u32, reason: String },

    #[error("modulus is reducible over GF({p}); divisible by {factor}")]
    ReducibleModulus { p: u32, factor: String },

    #[error("generator has order {order}, expected {expected}")]
    NotPrimitive { order: u64, expected: u64 },

    #[error("operands belong to different fields")]
    FieldMismatch,

    #[error("inverse of zero")]
    ZeroInverse,

    #[error("target degree {target} does not divide extension degree {m}")]
    NonDivisorDegree { target: u32, m: u32 },

    #[error("generator matrix has no rows")]
    EmptyRows,

    #[error("row {row} has length {len}, expected {expected}")]
    RaggedRows { row: usize, len: usize, expected: usize },

    #[error("coordinate {coord} out of range for length {len}")]
    CoordinateOutOfRange { coord: usize, len: usize },

    #[error("symbol {symbol} is not an element of GF({q})")]
    InvalidSymbol { symbol: u32, q: u64 },

    #[error("length mismatch: {0}")]
    MismatchedLengths(String),

    #[error("{what} needs {needed} steps, budget is {limit}")]
    BudgetExceeded { what: String, needed: u128, limit: u128 },

    #[error("linear system is singular")]
    SingularSystem,

    #[error("inconsistent inputs: {0}")]
    Inconsistent(String),

    #[error("non-integral value: {0}")]
    NonIntegral(String),

    #[error("parameter violation: {0}")]
    Parameter(String),

    #[error("invalid function table: {0}")]
    InvalidTable(String),

    #[error("inadmissible parameters: {0}")]
    Inadmissible(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn budget(what: impl Into<String>, needed: u128, limit: u128) -> Self {
        Error::BudgetExceeded { what: what.into(), needed, limit }
    }
}
