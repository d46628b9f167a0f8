use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("entries must be positive integers")]
    NonPositiveEntry,

    #[error("sequence is not non-decreasing: {0:?}")]
    NotNonDecreasing(Vec<u32>),

    #[error("a composition needs at least one part and no zero parts")]
    InvalidComposition,

    #[error("parts sum to {found}, expected {expected}")]
    SumMismatch { expected: usize, found: usize },

    #[error("subset contains 1, which is not allowed here")]
    SubsetContainsOne,

    #[error("subset member {member} lies outside [1, {max}]")]
    SubsetOutOfRange { member: usize, max: usize },

    #[error("input is not a permutation of 1..={0}")]
    NotAPermutation(usize),

    #[error("{0:?} is not a parking function for the given bound")]
    NotAParkingFunction(Vec<u32>),

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("invalid filled strip: {0}")]
    InvalidStrip(String),

    #[error("strip has no moveable cell (fixed point of the involution)")]
    FixedPoint,

    #[error("moving column {column} up produced an invalid strip: {reason}")]
    UpMoveInvalid { column: usize, reason: String },

    #[error("polynomials are over different variable lists")]
    VariableMismatch,

    #[error("unknown variable {0:?}")]
    UnknownVariable(String),

    #[error("integration variable {0:?} occurs in the upper limit")]
    VariableInUpperLimit(String),

    #[error("variable {0:?} still occurs and cannot be dropped")]
    VariableStillPresent(String),

    #[error("invalid bound vector d: {0}")]
    InvalidBounds(String),

    #[error("upper integration limit for x{variable} can become negative")]
    NegativeIntegrationBound { variable: usize },

    #[error("volume evaluated to a non-positive value {0}")]
    NonPositiveVolume(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
