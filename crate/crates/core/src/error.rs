use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("malformed exponent at byte {0}")]
    MalformedExponent(usize),
    #[error("zero denominator at byte {0}")]
    ZeroDenominator(usize),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("quotient is not supported only at the origin")]
    NotLocalAtOrigin,
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("field characteristic {0} is too small for contraction")]
    FieldTooSmall(u64),
    #[error("ideals are not disjoint (I + J != (1))")]
    NotDisjoint,
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
