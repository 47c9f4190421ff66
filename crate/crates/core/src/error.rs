use thiserror::Error;

/// Everything that can go wrong while building or checking a construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid instance (m={m}, k={k}): need m >= 2 and 1 <= k <= m-1")]
    Domain { m: usize, k: usize },

    #[error("malformed profile: {0}")]
    Profile(String),

    #[error("transform shape error: {0}")]
    Shape(String),

    #[error("index out of range: {0}")]
    Index(String),

    #[error(
        "m={m} exceeds the brute-force cap; rerun with a cap of at least {m} (current cap {cap})"
    )]
    CapExceeded { m: usize, cap: usize },

    #[error("arithmetic overflow in {0}; use an arbitrary-precision scalar")]
    Overflow(&'static str),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
