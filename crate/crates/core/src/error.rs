use thiserror::Error;

/// Errors raised by group construction and structural queries.
///
/// Resource errors (ceilings, budgets) are kept apart from malformed input so
/// callers can tell "unknown" from "false".
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GpiError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPerm(String),

    #[error("too large for desk scale: {what} is {size}, limit {limit}")]
    TooLarge {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("search budget exhausted after {states} states")]
    Budget { states: usize },

    #[error("subgroup is not normal in the ambient group")]
    NotNormal,

    #[error("element set is not a subgroup of the ambient group")]
    NotSubgroup,

    #[error("{0} is not a group of prime-power order")]
    NotPGroup(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("action is not a homomorphism into Aut(N): {0}")]
    InvalidAction(String),

    #[error("unknown catalog group `{0}`")]
    UnknownCatalog(String),

    #[error("malformed group description: {0}")]
    Description(String),
}

impl GpiError {
    /// True for errors caused by ceilings rather than by the input's mathematics.
    pub fn is_resource(&self) -> bool {
        matches!(self, GpiError::TooLarge { .. } | GpiError::Budget { .. })
    }
}

pub type Result<T> = std::result::Result<T, GpiError>;
