use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),

    #[error("duplicate arrow label `{0}`")]
    DuplicateArrow(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("dimension vector has {found} entries, quiver has {expected} vertices")]
    DimMismatch { expected: usize, found: usize },

    #[error("zero dimension vector")]
    ZeroVector,

    #[error("dimension vector is not sincere")]
    NotSincere,

    #[error("cannot reflect at vertex `{0}`: it carries a loop")]
    LoopedVertex(String),

    #[error("arrow `{0}` has no starred partner")]
    UnpairedArrow(String),

    #[error("{0}")]
    Precondition(String),

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("generator `{0}` is not invertible")]
    Singular(String),

    #[error("representation does not satisfy the defining relation")]
    RelationViolated,

    #[error("vector is not cyclic for the representation")]
    NotCyclic,

    #[error("search exhausted after {attempts} attempts: {what}")]
    Exhausted { what: String, attempts: usize },

    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// True for errors caused by malformed textual input.
    pub fn is_parse(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::DuplicateVertex(_)
                | Error::DuplicateArrow(_)
                | Error::UnknownVertex(_)
                | Error::DimMismatch { .. }
        )
    }
}
