use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Broad failure class, used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed or out-of-range input data.
    Input,
    /// Operands live over different universes or parameter sets.
    Domain,
    /// A computed value broke an invariant that should hold by construction.
    Invariant,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("{component} component {value} is outside [0, 1]")]
    ComponentOutOfRange { component: &'static str, value: f64 },

    #[error("{kind} must contain at least one identifier")]
    EmptyDomain { kind: &'static str },

    #[error("duplicate {kind} identifier `{id}`")]
    DuplicateIdentifier { kind: &'static str, id: String },

    #[error("invalid identifier `{id}`: {reason}")]
    InvalidIdentifier { id: String, reason: &'static str },

    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("invalid relative parameter matrix: {0}")]
    InvalidMatrix(String),

    #[error("decision panel is empty")]
    EmptyPanel,

    #[error("parameter subsets do not intersect")]
    EmptyIntersection,

    #[error("{locus}: parse error: {message}")]
    Parse { locus: String, message: String },

    #[error("{locus}: {message}")]
    Validation { locus: String, message: String },

    #[error("{locus}: {source}")]
    Io {
        locus: String,
        #[source]
        source: std::io::Error,
    },

    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::DomainMismatch(_) => ErrorClass::Domain,
            Error::Invariant(_) => ErrorClass::Invariant,
            _ => ErrorClass::Input,
        }
    }

    pub(crate) fn parse(locus: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            locus: locus.into(),
            message: message.into(),
        }
    }

    pub(crate) fn validation(locus: impl Into<String>, message: impl ToString) -> Self {
        Error::Validation {
            locus: locus.into(),
            message: message.to_string(),
        }
    }
}
