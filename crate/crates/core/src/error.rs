use thiserror::Error;

/// Errors raised by the lattice, fan, polytope, class-group and Euler routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero vector has no primitive generator")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: usize, found: usize },
    #[error("empty vector or matrix")]
    Empty,
    #[error("vectors do not form a lattice basis")]
    NotABasis,

    #[error("invalid ray {index}: {reason}")]
    InvalidRay { index: usize, reason: String },
    #[error("invalid cone {index}: {reason}")]
    InvalidCone { index: usize, reason: String },
    #[error("maximal cones {first} and {second} overlap")]
    OverlappingCones { first: usize, second: usize },
    #[error("ray generators do not positively span the ambient space")]
    NotPositivelySpanning,
    #[error("fan is not complete: {0}")]
    NotComplete(String),
    #[error("completeness could not be verified: {0}")]
    CompletenessUnverified(String),
    #[error("cone {0} is not simplicial")]
    NonSimplicialCone(usize),
    #[error("cone is not a cone of the fan")]
    ConeNotInFan,

    #[error("point set is not full-dimensional")]
    NotFullDimensional,
    #[error("point {0} is not a vertex of the polytope")]
    NotAVertex(String),
    #[error("polytope is not very ample")]
    NotVeryAmple,
    #[error("invalid rectangle witness: {0}")]
    InvalidWitness(String),

    #[error("ray generators do not span the ambient space")]
    RaysDoNotSpan,
    #[error("monoid search inconclusive: bound of {0} exhausted on a non-pointed cone")]
    Inconclusive(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
