use thiserror::Error;

use crate::dual::Condition;

/// Errors produced by the library.
///
/// Domain-level "negative answers" (a rejected validation, an undetermined
/// verdict, a membership rejection) are *not* errors; they are encoded in the
/// return types of the corresponding operations. `Error` covers malformed
/// input, violated preconditions and internal consistency failures.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("partition total {0} is odd; an even total is required")]
    OddTotal(u64),

    #[error("partition {0} is not symplectic")]
    NotSymplectic(String),

    #[error("partition {0} is not odd-orthogonal (odd total, even parts with even multiplicity)")]
    NotOddOrthogonal(String),

    #[error("total {total} exceeds the cap {cap}")]
    CapExceeded { total: u64, cap: u64 },

    #[error("exhaustive search found {found} extremal candidates instead of one for {input}")]
    NonUniqueExtremum { input: String, found: usize },

    #[error("malformed index list: {0}")]
    MalformedList(String),

    #[error("invalid Arthur parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid classification data: {0}")]
    InvalidData(String),

    #[error("local data shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("assembled local data rejected by the unitary-dual membership test: condition ({0})")]
    MembershipRejected(Condition),

    #[error("operation not applicable to a point of type {found}; expected {expected}")]
    WrongType { expected: String, found: String },

    #[error("square class of zero is undefined")]
    ZeroSquareClass,

    #[error("only {found} qualifying primes up to {limit}; {requested} requested")]
    InsufficientPrimes {
        requested: usize,
        found: usize,
        limit: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
