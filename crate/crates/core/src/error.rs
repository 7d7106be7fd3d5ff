use thiserror::Error;

/// Errors produced by the library.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("element {0} is outside the ideal acted on by F_{1}")]
    IdealMismatch(char, u8),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("field mismatch: expected F_{expected}, found F_{found}")]
    FieldMismatch { expected: u8, found: u8 },
    #[error("length {0} is odd; symplectic forms need even length")]
    OddLength(usize),
    #[error("codes over H_z must have positive length")]
    ZeroLength,
    #[error("component lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("k = {k} exceeds m = {m}")]
    KOutOfRange { k: usize, m: usize },
    #[error("budget exceeded: {what} needs {needed}, limit is {limit}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        limit: u128,
    },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub(crate) fn budget(what: &'static str, needed: u128, limit: u128) -> Self {
        Error::BudgetExceeded {
            what,
            needed,
            limit,
        }
    }
}
