use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("context mismatch: {0}")]
    Context(String),

    #[error("polynomial is not homogeneous for the {0} grading")]
    NotHomogeneous(&'static str),

    #[error("polynomial is not bihomogeneous: bidegrees {0} and {1} differ")]
    NotBihomogeneous(String, String),

    #[error("degenerate input: {0}")]
    Degenerate(&'static str),

    #[error("term division is not exact")]
    InexactDivision,

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search for {what} failed after {attempts} attempts (seed {seed})")]
    SearchFailure {
        what: &'static str,
        attempts: usize,
        seed: u64,
    },

    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("internal consistency error: {0}")]
    Consistency(String),

    #[error("{0}")]
    Input(String),
}

impl Error {
    /// Short machine-readable tag, used by the CLI error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Context(_) => "context",
            Error::NotHomogeneous(_) => "not_homogeneous",
            Error::NotBihomogeneous(..) => "not_bihomogeneous",
            Error::Degenerate(_) => "degenerate_input",
            Error::InexactDivision => "inexact_division",
            Error::Syntax { .. } => "syntax",
            Error::Precondition(_) => "precondition",
            Error::SearchFailure { .. } => "search_failure",
            Error::Resource(_) => "resource",
            Error::Consistency(_) => "consistency",
            Error::Input(_) => "input",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
