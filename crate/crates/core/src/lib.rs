//! Exact certificates for generalized torsion in Dehn fillings of Montesinos
//! knots.
//!
//! The crate builds the Montesinos family `K_n`, synthesizes planar diagrams,
//! derives Wirtinger presentations and Dehn-filling quotients, and produces
//! machine-checkable certificates that the meridian image is a generalized
//! torsion element of order exactly `p` — everything by exact symbolic and
//! integer computation (no floating point anywhere). Supporting analyses:
//! gcd-based tunnel/rank criteria, two-bridge classification, and the
//! Alexander-polynomial bi-orderability obstruction via Sturm sequences.
//!
//! The exact kernels in [`exact`] are generic over the integer scalar; the
//! aliases below pin the arbitrary-precision instantiation used everywhere
//! else.

pub mod alexander;
pub mod diagrams;
pub mod error;
pub mod exact;
pub mod gentorsion;
pub mod groups;
pub mod tangles;

#[cfg(feature = "testutil")]
pub mod testutil;

pub use error::{Error, Result};

/// Arbitrary-precision integer used by all production code paths.
pub type Int = num_bigint::BigInt;

/// Reduced fraction with positive denominator, sign on the numerator.
pub type Fraction = num_rational::Ratio<Int>;

/// Integer matrix over [`Int`].
pub type IntMatrix = exact::Matrix<Int>;

/// Integer polynomial over [`Int`], constant term first.
pub type IntPoly = exact::Poly<Int>;

/// Smith normal form decomposition over [`Int`].
pub type SnfDecomposition = exact::Snf<Int>;

/// Shorthand for building an [`Int`].
pub fn int(x: i64) -> Int {
    Int::from(x)
}

/// Shorthand for building a [`Fraction`]; panics on zero denominator.
pub fn frac(num: i64, den: i64) -> Fraction {
    Fraction::new(int(num), int(den))
}
