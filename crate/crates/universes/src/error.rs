use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("pattern has {actual} digits, schema expects {expected}")]
    LengthMismatch { expected: usize, actual: usize },

    /// A size guard tripped. The CLI reports these with exit status 2.
    #[error("cap exceeded: {what} needs {actual}, limit is {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("{0} is only defined for the 2⊕1 shape (two subjects, one fully observable object)")]
    RequiresTwoOne(&'static str),

    #[error("pattern is not realizable by any label assignment")]
    InfeasiblePattern,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("exactly two subjects are supported, got {0}")]
    SubjectCount(usize),

    #[error("subject {subject} has no percept for event '{event}'")]
    UnknownEvent { subject: usize, event: String },

    #[error("subject {subject} has no token for percept '{percept}'")]
    MissingToken { subject: usize, percept: String },

    #[error("invalid document: {0}")]
    InvalidDocument(String),

    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
