//! Exact tools for value semigroups of graded valuations.
//!
//! The crate decides (and, where no bound is known, semi-decides) whether
//! the order-of-vanishing valuations on the graded ring of a linear system
//! of binary forms have finitely generated value semigroups, and extends
//! the analysis to multigraded almost toric algebras by reducing ray by
//! ray to the curve case.
//!
//! Everything runs over exact rational arithmetic. The linear algebra and
//! form arithmetic are generic over the [`scalar::Scalar`] field; the
//! concrete instantiation used by the whole pipeline is the
//! arbitrary-precision [`Rat`] fixed here at the crate root.

pub mod cone;
pub mod curve;
pub mod error;
pub mod forms;
mod intfactor;
pub mod matrix;
pub mod multigraded;
pub mod scalar;
pub mod semigroup;
pub mod subspace;
pub mod unipoly;

/// Arbitrary-precision integers.
pub type Int = num_bigint::BigInt;

/// The scalar type of the whole pipeline: exact arbitrary-precision
/// rationals, always in lowest terms with positive denominator.
pub type Rat = num_rational::BigRational;

/// Binary forms over the pipeline scalar.
pub type Form = forms::BinaryForm<Rat>;

/// Matrices over the pipeline scalar.
pub type RatMatrix = matrix::Matrix<Rat>;

/// Subspaces over the pipeline scalar.
pub type RatSubspace = subspace::Subspace<Rat>;

pub use cone::ConeZm;
pub use curve::{CurveAlgebra, CurveInvariants, GenusClass, KfLocus, KfVerdict, LocusConstraint};
pub use error::Error;
pub use forms::{BinaryForm, PointP1, RationalRoots};
pub use multigraded::{
    CombinedVerdict, GradedPiece, HkfReport, HkfVerdict, MultigradedAlgebra, MultigradedKfReport,
    RayCurveData, RayGenus, RayKf, Tau, DEFAULT_LAMBDA_CAP, RAY_COVERAGE_CAVEAT,
};
pub use semigroup::{FgVerdict, SemigroupSample};
pub use unipoly::UniPoly;
