use thiserror::Error;

/// Errors raised by the algebraic engines.
///
/// Every variant describes malformed input; internal consistency failures
/// (a broken invariant in a computed object) panic instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("operation requires p = 2, got p = {0}")]
    RequiresPrimeTwo(u32),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("not a complex: {0}")]
    NotAComplex(String),
    #[error("identity violated: {0}")]
    IdentityViolated(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("inconsistent presentation: {0}")]
    InconsistentPresentation(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
