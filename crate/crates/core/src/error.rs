use thiserror::Error;

/// Errors raised when an operation is called outside its domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("ground set has {0} elements, at most {max} are supported", max = crate::setcomp::MAX_GROUND)]
    GroundTooLarge(usize),
    #[error("subset is not contained in the ground set")]
    NotSubset,
    #[error("ground sets overlap")]
    Overlap,
    #[error("ground sets differ")]
    GroundMismatch,
    #[error("color {value} outside 1..={n}")]
    ColorOutOfRange { value: usize, n: usize },
    #[error("constraint relation has a directed cycle")]
    CyclicConstraint,
    #[error("orientation has a directed cycle")]
    CyclicOrientation,
    #[error("duplicate abscissa {0}")]
    DuplicateAbscissa(i64),
    #[error("empty signature")]
    EmptySignature,
    #[error("invalid {what}: {detail}")]
    Invalid { what: &'static str, detail: String },
}

impl Error {
    pub(crate) fn invalid(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Invalid {
            what,
            detail: detail.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
