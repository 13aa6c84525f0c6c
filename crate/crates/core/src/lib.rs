//! Exact rewriting and truncated Hilbert-space representations of the
//! quantum matrix ball algebra `Pol(Mat_{2,2})_q`.
//!
//! The crate is split into four layers:
//!
//! * [`algebra`]: words in the eight letters `z11, z21, z12, z22` and their
//!   adjoints, Laurent-in-`q` coefficients over an exact field, and reduction
//!   to a normal form through the defining commutation relations.
//! * [`dynsys`]: the `Z^3` action on `R^3` that governs the joint spectrum of
//!   `z21 z21*, z12 z12*, z22 z22*`, with orbit enumeration and membership.
//! * [`rep`]: finite truncations of the seven irreducible series as sparse
//!   complex weighted-shift operators.
//! * [`verify`]: residual, spectrum and weight checks that certify the
//!   representations at finite truncation.
//!
//! The symbolic side is generic over the coefficient field (see
//! [`ExactField`]); the numeric side is generic over the real scalar
//! (see [`Real`]). The aliases below fix the common choices.

pub mod algebra;
pub mod dynsys;
mod error;
pub mod rep;
mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{ExactField, Real};

pub use algebra::{
    Generator, LaurentPoly, Letter, NormalMonomial, NormalPolynomial, PolAlgebra, Relation,
    Strategy, Word, WordPolynomial,
};
pub use dynsys::{MapTag, OrbitPoint, OrbitTag, Point3};
pub use rep::{BasisLattice, SeriesSpec, SeriesTag, SparseOperator, TruncatedRep};

/// Exact rational numbers used for symbolic coefficients.
pub type Rational = num_rational::BigRational;
/// Laurent polynomial in `q` with exact rational coefficients.
pub type Laurent = LaurentPoly<Rational>;
/// Element of the algebra with exact rational Laurent coefficients.
pub type Polynomial = NormalPolynomial<Rational>;
/// Un-normalized linear combination of words with exact coefficients.
pub type WordPoly = WordPolynomial<Rational>;
/// The algebra over exact rationals.
pub type Algebra = PolAlgebra<Rational>;

/// Double-precision complex scalar used by the numeric layers.
pub type Complex64 = num_complex::Complex<f64>;
/// Sparse operator over `f64`.
pub type Operator = SparseOperator<f64>;
/// Truncated representation over `f64`.
pub type Rep = TruncatedRep<f64>;
/// Series selection over `f64`.
pub type Series = SeriesSpec<f64>;

/// Shared instance of the algebra over exact rationals.
///
/// Building the rewrite table is cheap, but every caller that works with the
/// default coefficient field can reuse this one.
pub fn algebra() -> &'static Algebra {
    static ALGEBRA: std::sync::OnceLock<Algebra> = std::sync::OnceLock::new();
    ALGEBRA.get_or_init(Algebra::new)
}
