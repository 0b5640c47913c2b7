use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A table or map does not describe a well-formed structure.
    #[error("structural error: {0}")]
    Structural(String),

    #[error("inconsistent projections: {0}")]
    InconsistentProjections(String),

    /// A derived object violated a property that holds whenever the
    /// documented precondition holds.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("not an ordered Ehresmann semigroup: {0}")]
    NotOrderedEhresmann(String),

    #[error("not an Ehresmann-ordered category: {0}")]
    NotEhresmannOrderedCategory(String),

    /// A restriction or corestriction required by (OC6) does not exist.
    #[error("OC6 violation: {0}")]
    Oc6Violation(String),

    #[error("too large: {0}")]
    TooLarge(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown name: {0}")]
    UnknownName(String),
}

impl Error {
    pub(crate) fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }
}
