//! Crate-wide error type.

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("invalid circuit: {0}")]
    InvalidCircuit(String),
    #[error("invalid library: {0}")]
    InvalidLibrary(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("malformed input: {0}")]
    Format(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParam(msg.into())
    }

    pub fn circuit(msg: impl Into<String>) -> Self {
        Error::InvalidCircuit(msg.into())
    }

    pub fn library(msg: impl Into<String>) -> Self {
        Error::InvalidLibrary(msg.into())
    }

    pub fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }
}
