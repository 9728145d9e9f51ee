use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter inequality does not hold; the message names it.
    #[error("parameter out of range: {0}")]
    RangeViolation(String),

    #[error("block length {ell} does not divide codeword length {n}")]
    NonDivisible { ell: usize, n: usize },

    #[error("length mismatch: expected {expected} bits, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    /// The received string cannot come from a codeword through the channel.
    #[error("malformed received string: {0}")]
    MalformedReceived(String),

    #[error("block {block}: edit budget exceeded ({detail})")]
    BudgetExceeded { block: usize, detail: String },

    #[error("block {block}: insertion gap {gap} out of range [0, {max}]")]
    GapOutOfRange { block: usize, gap: usize, max: usize },

    #[error("block {block}: deletion position {position} out of range [1, {ell}]")]
    PositionOutOfRange { block: usize, position: usize, ell: usize },

    #[error("enumeration too large: {0}")]
    TooLarge(String),

    #[error("received string is unreachable from the transmitted word")]
    Unreachable,

    #[error("parse error: {0}")]
    Parse(String),
}
