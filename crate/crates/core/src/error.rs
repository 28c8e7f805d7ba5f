use thiserror::Error;

/// Crate-wide error type.
///
/// The CLI maps [`Error::Budget`] to exit code 2 and everything else to
/// exit code 1, so search guards must use the `Budget` variant.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Malformed input document; `line` is 1-based.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    /// Domain or precondition violation (wrong arity, bad index, ...).
    #[error("{0}")]
    Invalid(String),

    /// A search exceeded its configured budget.
    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("profile is not single-peaked with respect to the given axis")]
    NotSinglePeaked,

    /// An operation that needs a resolute rule got a tied winner set.
    #[error("rule is irresolute on this input; apply a tie-break")]
    Irresolute,
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    /// True for errors that should map to the "budget exceeded" exit code.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
