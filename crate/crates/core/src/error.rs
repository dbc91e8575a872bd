use thiserror::Error;

/// Errors raised by the toolkit.
///
/// `Infeasible` answers are never errors: deciders return `false` / `None`
/// for them. Errors are reserved for inputs outside an operation's domain
/// and for instances beyond the exact algorithms' stated capacity.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("capability error: {0}")]
    Capability(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("loop at {location}: the graph model is loopless")]
    Loop { location: String },

    #[error("unknown name: {0}")]
    Lookup(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn capability<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Capability(msg.into()))
}
