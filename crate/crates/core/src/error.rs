use thiserror::Error;

/// Errors shared across the crate. Everything here is a domain-precondition
/// failure; the exact kernels themselves are total functions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero polynomial has no root count")]
    ZeroPolynomial,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("continued fraction tail at entry {position} evaluates to zero")]
    CfZeroTail { position: usize },

    #[error("tangle word entries must be nonzero (entry {position} is 0)")]
    ZeroTangleEntry { position: usize },

    #[error("family index must be at least 2, got {0}")]
    FamilyIndexTooSmall(i64),

    #[error("Montesinos descriptor must be non-empty")]
    EmptyDescriptor,

    #[error("tangle denominator must be at least 2, got {0}")]
    SmallTangleDenominator(String),

    #[error("not a two-bridge knot fraction: {0}")]
    NotTwoBridgeKnot(String),

    #[error("not a single-component diagram: closure has {components} components")]
    MultiComponent { components: usize },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("unknown generator index {index} (alphabet has {alphabet_len} generators)")]
    UnknownGenerator { index: usize, alphabet_len: usize },

    #[error("presentation is missing a marked word: {0}")]
    MissingMarking(String),

    #[error("slope must be a reduced fraction: {0}")]
    UnreducedSlope(String),

    #[error("slope denominator must be positive here (canonicalize first): {0}")]
    NegativeSlopeDenominator(String),

    #[error("non-coherent disk: both puncture counts are nonzero ({pos} positive, {neg} negative)")]
    NonCoherentDisk { pos: u64, neg: u64 },

    #[error("slope below threshold: need p/q >= {threshold}, got {slope}")]
    SlopeBelowThreshold { threshold: String, slope: String },

    #[error("order undefined below 2: generalized-torsion order requires p >= 2, got p = {0}")]
    OrderBelowTwo(String),

    #[error("abelianization is not infinite cyclic: {0}")]
    NotKnotLikeAbelianization(String),

    #[error("presentation shape unsupported: {0}")]
    UnsupportedPresentation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
