use std::path::PathBuf;

/// Errors raised by the simulator.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An input buffer had the wrong length for the operation.
    #[error("invalid length for {what}: expected {expected}, got {got}")]
    InvalidLength {
        what: &'static str,
        expected: String,
        got: usize,
    },

    /// The received word is not within correction distance of any codeword.
    #[error("uncorrectable Reed-Solomon codeword")]
    DecodeFailure,

    /// A configuration value was rejected.
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn length(what: &'static str, expected: impl ToString, got: usize) -> Self {
        Error::InvalidLength {
            what,
            expected: expected.to_string(),
            got,
        }
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}
