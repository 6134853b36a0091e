use thiserror::Error;

/// Errors produced by trace construction, synthesis, attacks and file I/O.
#[derive(Debug, Error)]
pub enum Error {
    /// A container's declared shape does not match the data it holds.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// An argument is outside the domain an operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    /// A file exists but its contents do not follow the expected format.
    #[error("malformed file: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn dimension(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn format(msg: impl Into<String>) -> Self {
        Error::Format(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
