//! Exact arithmetic foundation: scalar trait, integer matrices with Smith
//! normal form, integer polynomials, and Sturm-sequence root counting.
//!
//! Everything is generic over the integer scalar; the crate root pins the
//! arbitrary-precision aliases used by the rest of the library.

mod matrix;
mod poly;
mod snf;
mod sturm;

pub use matrix::Matrix;
pub use poly::Poly;
pub use snf::{coker_element_order, snf, Snf};
pub use sturm::positive_real_root_count;

use num_integer::Integer;
use num_traits::Signed;
use std::fmt;
use std::hash::Hash;

/// Integer scalar the exact kernels are generic over.
///
/// `BigInt` is the production choice (see the crate-root aliases); the fixed
/// width types satisfy the bounds too and are handy in unit tests.
pub trait Scalar: Integer + Signed + Clone + Hash + fmt::Debug + fmt::Display + From<i64> + 'static {}

impl<T> Scalar for T where
    T: Integer + Signed + Clone + Hash + fmt::Debug + fmt::Display + From<i64> + 'static
{
}
