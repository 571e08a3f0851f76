use thiserror::Error;

pub type Result<T, E = DyckError> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DyckError {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("{0} is not a Dyck number")]
    NotMember(u64),

    #[error("{low} and {high} are not adjacent terms (next term after {low} is {next})")]
    NotContiguous { low: u64, high: u64, next: u64 },

    #[error("pattern mixes binary lengths {first} and {other}")]
    MixedLevels { first: u32, other: u32 },

    #[error("no copy with top {top}: {reason}")]
    InvalidCopy { top: u64, reason: String },

    #[error("not a copy: {0}")]
    NotACopy(String),

    #[error("patterns are not adjacent: {top} is not the predecessor of {first}")]
    NotAdjacent { top: u64, first: u64 },

    #[error("level {n} exceeds the bound {bound}")]
    Bound { n: u32, bound: u32 },

    #[error("{term} does not have binary length {expected}")]
    LevelMismatch { term: u64, expected: u32 },

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("network error: {0}")]
    Network(String),

    #[error("no cached b-file for {0} (offline mode)")]
    CacheMiss(String),

    #[error("computed values and b-file indices do not overlap")]
    NoOverlap,

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for DyckError {
    fn from(err: std::io::Error) -> Self {
        DyckError::Io(err.to_string())
    }
}
