use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value table has {found} entries, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("value {value} at index {index} exceeds target [{target}]")]
    OutOfRange {
        index: usize,
        value: BigUint,
        target: BigUint,
    },

    #[error("map decreases at index {index}")]
    NotMonotone { index: usize },

    #[error("cannot compose: {context}")]
    SourceTargetMismatch { context: String },

    #[error("maps do not share a source: [{left}] vs [{right}]")]
    SourceMismatch { left: usize, right: usize },

    #[error("unexpected target: expected [{expected}], found [{found}]")]
    TargetMismatch { expected: BigUint, found: BigUint },

    #[error("point lives at level {found}, expected level {expected}")]
    LevelMismatch { expected: usize, found: usize },

    #[error("cell index {k} out of range for level {m}")]
    IndexOutOfRange { k: i64, m: usize },

    #[error("point does not lie in prism cell S_{k} at level {m}")]
    NotInCell { k: usize, m: usize },

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("invalid barycentric point: {0}")]
    InvalidPoint(String),

    #[error("ordinal [{0}] is too large to materialize")]
    TooLarge(BigUint),

    #[error("bad literal {literal:?}: {reason}")]
    BadLiteral { literal: String, reason: String },
}

impl Error {
    pub(crate) fn bad_literal(literal: &str, reason: impl Into<String>) -> Self {
        Error::BadLiteral {
            literal: literal.to_string(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
