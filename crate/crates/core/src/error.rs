use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument must be a positive integer")]
    ZeroArgument,
    #[error("{what} out of domain: {detail}")]
    Domain { what: &'static str, detail: String },
    /// An exact-division or half-integer cancellation failed. Only a bug can
    /// trigger this.
    #[error("integrality violated in {context}: {value}")]
    Integrality { context: String, value: String },
    #[error("two evaluations of {context} disagree: {left} vs {right}")]
    Inconsistent {
        context: String,
        left: String,
        right: String,
    },
    #[error("negative recurrence index {0}")]
    NegativeIndex(i64),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("{what} with alphabet {alphabet} and n = {n} exceeds the enumeration cap")]
    CapExceeded {
        what: &'static str,
        n: usize,
        alphabet: u8,
    },
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("no closed form answers this query: {0}")]
    NoFormula(String),
    #[error("fixture: {0}")]
    Fixture(String),
}

impl Error {
    pub(crate) fn domain(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            what,
            detail: detail.into(),
        }
    }
}
