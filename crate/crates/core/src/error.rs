use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("partition {parts:?} does not fit in a {m}x{n} box")]
    BoxViolation { parts: Vec<u32>, m: u32, n: u32 },

    #[error("invalid step word: {0}")]
    InvalidWord(String),

    #[error("invalid rank constraint: {0}")]
    InvalidConstraint(String),

    #[error("outside domain: {0}")]
    Domain(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("family has up to {size} members, above the cap of {cap}")]
    CapExceeded { size: u128, cap: u64 },

    #[error("coefficient {0} is not an integer")]
    NonIntegral(String),
}

pub type Result<T> = std::result::Result<T, Error>;
