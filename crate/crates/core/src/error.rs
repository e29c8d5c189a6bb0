use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A configured size limit would be exceeded.
    #[error("{what} of {subject} is {count}, above the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        subject: String,
        count: u128,
        cap: u128,
    },

    #[error("{delta} does not divide the group exponent {exponent}")]
    NotADivisor { delta: u64, exponent: u64 },

    /// The result does not fit the chosen count type.
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    /// Argument outside the domain of an operation.
    #[error("{0}")]
    Domain(String),

    #[error("invalid group spec {input:?}: {reason}")]
    Parse { input: String, reason: String },

    /// An exactness or consistency assertion failed. Always a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn cap(what: &'static str, subject: impl ToString, count: u128, cap: u128) -> Self {
        Error::CapExceeded {
            what,
            subject: subject.to_string(),
            count,
            cap,
        }
    }
}
