//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("ambient dimension must be positive")]
    ZeroAmbientDim,

    #[error("entry count mismatch: {rows}x{cols} matrix needs {} entries, got {got}", rows * cols)]
    EntryCount { rows: usize, cols: usize, got: usize },

    #[error("degree mismatch: expected forms of degree {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("the given forms span only the zero space")]
    EmptySpan,

    #[error("ord of zero form undefined")]
    ZeroForm,

    #[error("gcd of two zero forms undefined")]
    GcdOfZeroForms,

    #[error("(0:0) is not a point of the projective line")]
    InvalidPoint,

    #[error("Hilbert data not stabilized at kmax={kmax}: need 3 consecutive equal differences; raise kmax")]
    NotStabilized { kmax: usize },

    #[error("the system has Hilbert growth 0 (a single form generates a univariate polynomial ring)")]
    DegreeZero,

    #[error("weight cone is not pointed, so the degree-zero part is larger than the ground field")]
    NonPointedCone,

    #[error("rank {rank} is outside the supported range 1..=4")]
    RankUnsupported { rank: usize },

    #[error("generator {index} has zero polynomial part")]
    ZeroGenerator { index: usize },

    #[error("generator {index} has weight 0 with a non-constant polynomial part")]
    NonConstantDegreeZero { index: usize },

    #[error("algebra has no non-trivial generators")]
    NoGenerators,

    #[error("ray Veronese not stabilized: {details}")]
    RayNotStabilized { details: String },

    #[error("membership criterion does not apply: {reason}")]
    Unsupported { reason: String },
}
