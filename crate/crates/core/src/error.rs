use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure names the precondition that was violated and the datum that
/// violated it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    Dimension {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("rank condition violated in {context}: expected rank {expected}, found {found}")]
    Rank {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("degree condition violated: {0}")]
    Degree(String),

    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("configuration is not polarized: no vector pairs positively with every form of {forms}")]
    NotPolarized { forms: String },

    #[error("epsilon {epsilon} is not regular: it lies on the hyperplane with normal {normal}")]
    NotRegular { epsilon: String, normal: String },

    #[error("0 is not an isolated common zero of {0}")]
    NotIsolated(String),

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown variable `{name}` (expected x1..x{nvars})")]
    UnknownVariable { name: String, nvars: usize },

    #[error("internal invariant failed: {0}")]
    Internal(String),
}

impl Error {
    /// Parse-class errors (bad text) as opposed to mathematical precondition
    /// failures.
    pub fn is_parse_error(&self) -> bool {
        matches!(self, Error::Syntax { .. } | Error::UnknownVariable { .. })
    }
}
