use thiserror::Error;

/// Failures raised by the measure engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The representation enumeration produced more results than allowed.
    #[error("enumeration cap of {cap} representations exceeded")]
    CapExceeded { cap: usize },
    /// Text could not be parsed as a rational number.
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
