use alloc::string::String;

use crate::exactla::Field;

/// Errors raised by the algebraic layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{0} is not a supported prime (need a prime below 2^32)")]
    NotPrime(u64),
    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),
    #[error("malformed quiver: {0}")]
    MalformedQuiver(String),
    #[error("malformed relation: {0}")]
    MalformedRelation(String),
    #[error("nonzero path classes survive at nilpotency bound {0}; algebra is not finite-dimensional")]
    NotFiniteDimensional(usize),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("unknown arrow {0}")]
    UnknownArrow(String),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("invalid module map: {0}")]
    InvalidMap(String),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("module side mismatch: {0}")]
    SideMismatch(String),
    #[error("functor variance mismatch")]
    VarianceMismatch,
    #[error("a map into a projective does not extend over the approximation")]
    ExtensionFailure,
    #[error("a map from an injective does not lift against the approximation")]
    LiftFailure,
    #[error("vanishing check failed: {0}")]
    VanishingCheckFailed(String),
    #[error("certificate sequence is not exact: {0}")]
    NotExact(String),
    #[error("algebra is not hereditary")]
    NotHereditary,
    #[error("splitting failed: {0}")]
    SplitFailure(String),
    #[error("natural transformation is not an isomorphism on injectives: {0}")]
    NotDerivedIso(String),
}

pub type Result<T> = core::result::Result<T, Error>;
