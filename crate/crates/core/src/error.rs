use thiserror::Error;

/// Errors raised by the constructors and operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("potential exponent must be at least 2, got {0}")]
    ExponentTooSmall(i64),

    #[error("factor split a={a} is outside [1, {}] for x^{n}", n - 1)]
    SplitOutOfRange { n: i64, a: i64 },

    #[error("objects live over different potentials x^{left} and x^{right}")]
    PotentialMismatch { left: i64, right: i64 },

    #[error("series logarithm needs constant x-term 1")]
    LogNonUnit,

    #[error("series exponential needs vanishing constant x-term")]
    ExpNonZeroConstant,

    #[error("series is not invertible: {0}")]
    NotInvertible(&'static str),

    #[error("truncation must be positive")]
    BadTruncation,

    #[error("index {index} out of range for a collection of {len} objects")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("segment of length {0} not supported (expected 1 to 3 consecutive objects)")]
    BadSegment(usize),

    #[error("mutation not applicable: {0}")]
    MutationRejected(String),

    #[error("monodromy kind does not match the collection kind")]
    KindMismatch,

    #[error("degenerate stable collection: {0}")]
    Degenerate(String),

    #[error("no Hom table available for this pair: {0}")]
    UnavailablePair(String),

    #[error("k must be odd, got {0}")]
    EvenWeight(i64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
