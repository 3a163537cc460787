use thiserror::Error;

use crate::ring::RingDescriptor;

/// Failures of the ring layer itself.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("invalid ring descriptor `{text}`: {reason}")]
    BadDescriptor { text: String, reason: String },
    #[error("element {elem} is not a canonical element of {ring}")]
    Mismatch { ring: RingDescriptor, elem: String },
    #[error("{elem} has no multiplicative inverse in {ring}")]
    NotInvertible { ring: RingDescriptor, elem: String },
    #[error("{0} is not a field, so division is unavailable")]
    NotAField(RingDescriptor),
    #[error("field inversion was called while trapped (computation is not division-free)")]
    InverseTrapped,
}

/// Coarse classification used by front ends to pick exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed input or a contract violation by the caller.
    Usage,
    /// An algorithm declined to run on this ring or size.
    Refusal,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("truncation caps differ: {left} vs {right}")]
    CapMismatch { left: usize, right: usize },
    #[error("index {index} out of range (limit {limit})")]
    OutOfRange { index: usize, limit: usize },
    #[error("truncated polynomial is not unic (constant term is not one)")]
    NotUnic,
    #[error("product of an empty sequence of factors")]
    EmptyProduct,
    #[error("{algorithm} refused: {reason}")]
    Refused { algorithm: &'static str, reason: String },
    #[error("hypothesis not satisfied: leading {order}x{order} submatrix is singular")]
    HypothesisNotSatisfied { order: usize },
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("{0}")]
    Usage(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Refused { .. } | Error::HypothesisNotSatisfied { .. } => ErrorKind::Refusal,
            Error::Ring(RingError::NotAField(_) | RingError::NotInvertible { .. }) => {
                ErrorKind::Refusal
            }
            _ => ErrorKind::Usage,
        }
    }

    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse { location: location.into(), message: message.into() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
