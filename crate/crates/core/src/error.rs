use crate::complex::MAX_GROUND;

/// Errors produced by complex constructions and invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ground set size {0} out of range (expected 1..={MAX_GROUND})")]
    GroundSize(usize),
    #[error("vertex {vertex} out of range for ground set of size {ground}")]
    VertexOutOfRange { vertex: usize, ground: usize },
    #[error("ground set mismatch: {0} vs {1}")]
    GroundMismatch(usize, usize),
    #[error("operation undefined on the void complex")]
    VoidComplex,
    #[error("Alexander dual undefined for the full simplex (its ideal is zero)")]
    DualOfFullSimplex,
    #[error("boundary of the empty simplex is undefined")]
    EmptySimplexBoundary,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic {0} out of range (expected 2 <= p < 2^31)")]
    CharacteristicRange(u64),
    #[error("unrecognized field spec {0:?} (expected \"gf:<p>\" or \"q\")")]
    FieldSpecSyntax(String),
    #[error("relative homology requires a non-void subcomplex")]
    VoidSubcomplex,
    #[error("subcomplex is not contained in the ambient complex")]
    NotSubcomplex,
    #[error("set family must be non-empty")]
    EmptyFamily,
    #[error("squarefree generator must be non-empty (unit ideal)")]
    UnitIdeal,
    #[error("block sizes must be positive")]
    EmptyBlock,
    #[error("skeleton dimension {d} must be below ground size {n}")]
    SkeletonDim { d: usize, n: usize },
    #[error("invalid probability {0:?} (expected a value in [0,1] like \"0.25\" or \"1/3\")")]
    ProbabilitySyntax(String),
}

pub type Result<T> = std::result::Result<T, Error>;
