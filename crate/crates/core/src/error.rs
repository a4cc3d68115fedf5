use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime in [2, 2^31 - 1]")]
    NotPrime(u64),
    #[error("characteristic mismatch: {0} vs {1}")]
    CharMismatch(u32, u32),
    #[error("division by zero in F_{0}")]
    DivisionByZero(u32),
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("{0}")]
    Domain(String),
    #[error("resource limit: {0}")]
    Resource(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    /// True for failures caused by a computation cap rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
