use thiserror::Error;

/// Errors raised by the library. The variants mirror the CLI exit-code
/// contract: usage and domain problems are caller mistakes, internal
/// errors mean an invariant the code relies on was violated.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed request: mismatched sizes or fields, bad arguments.
    #[error("usage error: {0}")]
    Usage(String),
    /// Arguments are well formed but outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The request is valid mathematics that this crate does not handle
    /// (characteristic 2, factoring over the rationals).
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// A configured size bound would be exceeded.
    #[error("resource bound exceeded: {0}")]
    Resource(String),
    /// Input text could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
    /// A consistency check inside a computation failed.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! bail {
    ($kind:ident, $($arg:tt)*) => {
        return Err($crate::error::Error::$kind(format!($($arg)*)))
    };
}
pub(crate) use bail;
