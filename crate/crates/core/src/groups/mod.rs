//! Words and finitely presented groups: free reduction, Wirtinger
//! presentations, 0-framed longitudes, Dehn-filling quotients, abelianization,
//! and bounded Tietze simplification.

mod presentation;
mod tietze;
mod word;

pub use presentation::{
    element_h1_order, fill, h1, longitude, wirtinger, AbelianInvariants, GroupPresentation,
    MARK_LONGITUDE, MARK_MERIDIAN,
};
pub use tietze::tietze_simplify;
pub use word::Word;

use crate::error::{Error, Result};
use crate::{Fraction, Int};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Surgery slope p/q: reduced, with p >= 0 (both negated when needed) and
/// q = 1 fixed for p = 0. Unlike [`Fraction`] this carries the meridional
/// slope 1/0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Slope {
    p: Int,
    q: Int,
}

impl Slope {
    pub fn new(p: impl Into<Int>, q: impl Into<Int>) -> Result<Self> {
        let (mut p, mut q) = (p.into(), q.into());
        if p.is_zero() && q.is_zero() {
            return Err(Error::UnreducedSlope("0/0".into()));
        }
        if !p.gcd(&q).is_one() {
            return Err(Error::UnreducedSlope(format!("{p}/{q}")));
        }
        if p.is_negative() || (p.is_zero() && q.is_negative()) {
            p = -p;
            q = -q;
        }
        Ok(Self { p, q })
    }

    pub fn from_fraction(f: &Fraction) -> Self {
        Self::new(f.numer().clone(), f.denom().clone()).expect("fractions are reduced")
    }

    pub fn p(&self) -> &Int {
        &self.p
    }

    pub fn q(&self) -> &Int {
        &self.q
    }

    /// `None` for the meridional slope 1/0.
    pub fn to_fraction(&self) -> Option<Fraction> {
        if self.q.is_zero() {
            return None;
        }
        Some(Fraction::new(self.p.clone(), self.q.clone()))
    }

    /// Mirror: p/q -> p/(-q).
    pub fn mirrored(&self) -> Self {
        Self {
            p: self.p.clone(),
            q: -self.q.clone(),
        }
    }

    /// Exact comparison p/q >= t for a positive denominator slope.
    pub fn at_least(&self, t: &Fraction) -> bool {
        debug_assert!(self.q.is_positive());
        // p/q >= a/b  <=>  p*b >= a*q  (q, b > 0)
        self.p.clone() * t.denom() >= t.numer() * self.q.clone()
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}
