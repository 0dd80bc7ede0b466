use thiserror::Error;

/// Errors raised when an operation's preconditions do not hold.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("quantifier requires 0 <= a < b <= 1, got a={a}, b={b}")]
    InvalidQuantifier { a: f64, b: f64 },
    #[error("membership argument {0} is outside [0, 1]")]
    MembershipOutOfRange(f64),
    #[error("criteria count must be at least 1")]
    ZeroCriteria,
    #[error("ranker count must be at least 1")]
    ZeroRankers,
    #[error("weights must lie in [0, 1] and sum to 1 (sum = {sum})")]
    UnnormalizedWeights { sum: f64 },
    #[error("rank positions are 1-based; got 0")]
    ZeroPosition,
    #[error(
        "PAS config requires 0 < step <= 1 and 0 <= floor < 1, got step={step}, floor={floor}"
    )]
    InvalidPasConfig { step: f64, floor: f64 },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("cutoff k must be at least 1")]
    ZeroCutoff,
    #[error("{0} requires at least one value")]
    EmptyInput(&'static str),
    #[error("predicted and truth rankings share no items")]
    NoSharedItems,
    #[error("truth ranking is empty")]
    EmptyTruth,
    #[error("ranking contains a duplicate item at position {position}")]
    DuplicateItem { position: usize },
    #[error("modified Spearman needs m >= 2 and max position > 1 (m={m}, max={max})")]
    DegenerateSpearman { m: usize, max: usize },
    #[error("positions are 1-based; got 0 at index {index}")]
    ZeroSpearmanPosition { index: usize },
}

pub type Result<T> = core::result::Result<T, Error>;
