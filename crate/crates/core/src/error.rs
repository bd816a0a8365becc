use thiserror::Error;

/// Errors raised while evaluating effects, traversals and law checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed effect for {applicative}: {found}")]
    MalformedEffect { applicative: String, found: String },

    #[error("payload is not a function: {0}")]
    NotAFunction(String),

    #[error("expected {expected}, found {found}")]
    TypeMismatch { expected: &'static str, found: String },

    #[error("expected {expected} effects, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("shape `{shape}` has arity {arity}, payload has length {found}")]
    ArityMismatch {
        shape: String,
        arity: usize,
        found: usize,
    },

    #[error("unknown shape `{0}`")]
    UnknownShape(String),

    #[error("structure of size {size} exceeds budget {budget}")]
    BudgetExceeded { size: usize, budget: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn mismatch(expected: &'static str, found: impl ToString) -> Self {
        Error::TypeMismatch {
            expected,
            found: found.to_string(),
        }
    }

    pub(crate) fn malformed(applicative: impl Into<String>, found: impl ToString) -> Self {
        Error::MalformedEffect {
            applicative: applicative.into(),
            found: found.to_string(),
        }
    }
}
