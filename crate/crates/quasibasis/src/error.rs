use thiserror::Error;

use crate::space::Idempotent;

/// Errors raised by the algebraic layer.
///
/// Structural errors (mismatched spaces, bad dimensions, out-of-range atoms)
/// indicate the caller combined values that do not live together; membership
/// errors carry the exact locus on which a solve failed.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("atom spaces do not match ({left} vs {right} atoms)")]
    SpaceMismatch { left: usize, right: usize },

    #[error("ambient ranks do not match (expected {expected}, found {found})")]
    RankMismatch { expected: usize, found: usize },

    #[error("atom index {atom} out of range for a space of {size} atoms")]
    AtomOutOfRange { atom: usize, size: usize },

    #[error("invalid atom space: {0}")]
    InvalidSpace(String),

    #[error("invalid value: {0}")]
    InvalidValue(String),

    #[error("not a partition of the identity: {0}")]
    NotAPartition(String),

    #[error("element is not a member on atoms {}", .outside.describe_atoms())]
    NotAMember { outside: Idempotent },

    #[error("element is already a member of the current span")]
    AlreadyMember,

    #[error("quasi-basis candidate failed verification: {0}")]
    UnverifiedBasis(String),
}

pub type Result<T> = std::result::Result<T, Error>;
