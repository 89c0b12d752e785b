use thiserror::Error;

/// Errors raised by the decision engine and its supporting arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A table or matrix would exceed the configured size cap.
    #[error("resource cap exceeded: {what} needs {size}, cap is {cap}")]
    ResourceCap {
        what: &'static str,
        size: u128,
        cap: u128,
    },

    /// The operation was called in a state where it is undefined.
    #[error("invalid state: {0}")]
    State(String),

    /// A serialized document could not be interpreted.
    #[error("malformed document: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
