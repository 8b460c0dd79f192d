//! Fox calculus: Alexander polynomial of a knot-like presentation, the knot
//! determinant, and the positive-real-root obstruction flags for
//! bi-orderability.

use crate::error::{Error, Result};
use crate::exact::positive_real_root_count;
use crate::groups::{h1, GroupPresentation, Word};
use crate::{Int, IntPoly};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Element of Z[t, t^-1]: Laurent monomial exponent -> coefficient, no zero
/// coefficients stored. This is the image of the group ring under the
/// abelianization sending every generator to t.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroupRingElement {
    terms: BTreeMap<i64, Int>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(exp: i64, coeff: impl Into<Int>) -> Self {
        let mut out = Self::default();
        out.add_term(exp, coeff.into());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<i64, Int> {
        &self.terms
    }

    pub fn add_term(&mut self, exp: i64, coeff: Int) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Int::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Shift by t^k.
    pub fn shifted(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Convert to an ordinary polynomial; requires no negative exponents.
    pub fn to_poly(&self) -> IntPoly {
        let Some(max) = self.terms.keys().next_back() else {
            return IntPoly::zero();
        };
        debug_assert!(self.min_exp().unwrap() >= 0);
        let mut coeffs = vec![Int::zero(); *max as usize + 1];
        for (&e, c) in &self.terms {
            coeffs[e as usize] = c.clone();
        }
        IntPoly::new(coeffs)
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*t^{e}")?;
        }
        Ok(())
    }
}

/// Fox derivative of `w` with respect to generator `x`, evaluated in
/// Z[t, t^-1] under the abelianization. Satisfies the product rule
/// d(uv) = du + ab(u) dv.
pub fn fox_derivative(w: &Word, x: usize, alphabet_len: usize) -> Result<GroupRingElement> {
    if x >= alphabet_len {
        return Err(Error::UnknownGenerator {
            index: x,
            alphabet_len,
        });
    }
    if let Some(g) = w.max_generator() {
        if g >= alphabet_len {
            return Err(Error::UnknownGenerator {
                index: g,
                alphabet_len,
            });
        }
    }
    let mut out = GroupRingElement::zero();
    let mut prefix_exp = 0i64;
    for (g, s) in w.letters() {
        if s > 0 {
            if g == x {
                out.add_term(prefix_exp, Int::from(1));
            }
            prefix_exp += 1;
        } else {
            prefix_exp -= 1;
            if g == x {
                out.add_term(prefix_exp, Int::from(-1));
            }
        }
    }
    Ok(out)
}

/// Determinant of a square polynomial matrix by fraction-free (Bareiss)
/// elimination; divisions by the previous pivot are exact over Z[t].
fn poly_det(mut a: Vec<Vec<IntPoly>>) -> IntPoly {
    let n = a.len();
    if n == 0 {
        return IntPoly::one();
    }
    let mut sign_flip = false;
    let mut prev = IntPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return IntPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j]
                    .mul(&a[k][k])
                    .sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = t.exact_div(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = IntPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign_flip {
        det.neg()
    } else {
        det
    }
}

/// Fox Jacobian (rows = relators, columns = generators) with the column of
/// the highest-index generator deleted and each row shifted into Z[t].
fn reduced_jacobian(p: &GroupPresentation) -> Result<Vec<Vec<IntPoly>>> {
    let g = p.generators().len();
    let mut rows = Vec::with_capacity(p.relators().len());
    for r in p.relators() {
        let mut row = Vec::with_capacity(g.saturating_sub(1));
        for x in 0..g.saturating_sub(1) {
            row.push(fox_derivative(r, x, g)?);
        }
        let shift = row
            .iter()
            .filter_map(GroupRingElement::min_exp)
            .min()
            .unwrap_or(0)
            .min(0);
        rows.push(
            row.into_iter()
                .map(|e| e.shifted(-shift).to_poly())
                .collect::<Vec<_>>(),
        );
    }
    Ok(rows)
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Alexander polynomial: gcd of the maximal minors of the Fox Jacobian with
/// one generator column deleted, normalized so the constant term is nonzero
/// and positive. Requires an infinite-cyclic abelianization and a Wirtinger
/// or deficiency-one shape (relators = generators or generators - 1).
pub fn alexander_polynomial(p: &GroupPresentation) -> Result<IntPoly> {
    if !h1(p).is_infinite_cyclic() {
        return Err(Error::NotKnotLikeAbelianization(h1(p).to_string()));
    }
    let g = p.generators().len();
    let r = p.relators().len();
    if r + 1 < g || r > g {
        return Err(Error::UnsupportedPresentation(format!(
            "{g} generators with {r} relators; need relators in {{generators-1, generators}}"
        )));
    }
    let k = g - 1;
    let jac = reduced_jacobian(p)?;
    let mut gcd = IntPoly::zero();
    for rows in subsets_of_size(r, k) {
        let minor: Vec<Vec<IntPoly>> = rows.iter().map(|&i| jac[i].clone()).collect();
        gcd = gcd.gcd(&poly_det(minor));
    }
    Ok(normalize_alexander(&gcd))
}

/// Drop the t^k unit and fix the sign so the constant term is positive.
pub fn normalize_alexander(delta: &IntPoly) -> IntPoly {
    let lowered = delta.lowered();
    match lowered.lowest_nonzero() {
        Some((_, c)) if c.is_negative() => lowered.neg(),
        _ => lowered,
    }
}

/// |delta(-1)|, the knot determinant.
pub fn determinant(delta: &IntPoly) -> Int {
    delta.eval(&Int::from(-1)).abs()
}

/// Bi-orderability obstruction flags read off the Alexander polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionFlags {
    /// No positive real roots: the knot group is not bi-orderable, provided
    /// the unchecked rational-homological-fiberedness hypothesis holds.
    pub no_positive_roots_not_biorderable: bool,
    /// Every root is positive real (count = degree): necessary condition on
    /// the bi-orderable side.
    pub all_roots_positive_candidate: bool,
}

/// Obstruction report for one polynomial. `unchecked_hypotheses` carries the
/// conditions this artifact cannot verify (they need the knot genus).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    pub delta: IntPoly,
    pub degree: usize,
    pub positive_real_roots: usize,
    pub flags: ObstructionFlags,
    pub unchecked_hypotheses: Vec<String>,
    pub note: Option<String>,
}

pub const HYP_RATIONALLY_FIBERED: &str =
    "rationally homologically fibered: deg(delta) = 2 * genus (not checked; needs the genus)";

/// Count positive real roots and set the obstruction flags; constant
/// polynomials yield both flags false with a note.
pub fn biorder_flags(delta: &IntPoly) -> Result<ObstructionReport> {
    if delta.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let delta = normalize_alexander(delta);
    let degree = delta.degree().unwrap_or(0);
    let positive_real_roots = positive_real_root_count(&delta)?;
    let constant = degree == 0;
    let flags = ObstructionFlags {
        no_positive_roots_not_biorderable: !constant && positive_real_roots == 0,
        all_roots_positive_candidate: !constant && positive_real_roots == degree,
    };
    Ok(ObstructionReport {
        delta,
        degree,
        positive_real_roots,
        flags,
        unchecked_hypotheses: vec![HYP_RATIONALLY_FIBERED.to_string()],
        note: constant.then(|| "trivial polynomial: no conclusion".to_string()),
    })
}
