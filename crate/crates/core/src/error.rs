use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid input: {0}")]
    Validation(String),

    #[error("{what} {requested} out of range (available: {available})")]
    Range {
        what: &'static str,
        requested: usize,
        available: usize,
    },

    #[error("series with zero constant term is not invertible")]
    NotInvertible,
}

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
}
