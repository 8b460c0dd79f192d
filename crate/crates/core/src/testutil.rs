//! Test-support: independent oracles and seeded random corpora. Compiled
//! only with the `testutil` feature; nothing here is part of the library
//! proper, and the oracles deliberately avoid the implementation paths they
//! cross-check.

use crate::exact::{Matrix, Poly};
use crate::groups::Word;
use crate::Int;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Deterministic RNG for the property corpora; `GENTOR_SEED` overrides the
/// default seed.
pub fn corpus_rng() -> StdRng {
    let seed = std::env::var("GENTOR_SEED")
        .ok()
        .and_then(|s| s.parse::<u64>().ok())
        .unwrap_or(0x67656e746f72);
    StdRng::seed_from_u64(seed)
}

/// Positive-real-root count by interval bisection with Descartes
/// sign-variation certificates (exact rational endpoint transforms on the
/// square-free part). Independent of the Sturm implementation.
pub fn bisection_positive_root_count(p: &Poly<Int>) -> usize {
    assert!(!p.is_zero(), "oracle needs a nonzero polynomial");
    let sf = p.square_free_part();
    count_positive_roots(&sf, 0)
}

fn descartes_variations(p: &Poly<Int>) -> usize {
    let signs: Vec<i8> = p
        .coeffs()
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| if c.is_negative() { -1 } else { 1 })
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Roots of a square-free polynomial in (0, inf): Descartes' bound settles
/// v <= 1; otherwise bisect (0,1), {1}, (1,inf) by the exact Moebius
/// transforms x -> 1/(1+y) and x -> y+1.
fn count_positive_roots(p: &Poly<Int>, depth: usize) -> usize {
    assert!(depth < 128, "bisection oracle failed to separate roots");
    let p = p.lowered(); // drop roots at 0: not in the open interval
    let v = descartes_variations(&p);
    if v <= 1 {
        return v;
    }
    let at_one = if p.eval(&Int::one()).is_zero() { 1 } else { 0 };
    // roots in (1, inf) <-> positive roots of p(y+1); roots in (0, 1) <->
    // positive roots of the reversed-then-shifted polynomial. A root at
    // x = 1 lands on y = 0 in both transforms and is stripped by lowering.
    let above = p.shift_by_one();
    let below = p.reversed().shift_by_one();
    count_positive_roots(&below, depth + 1) + at_one + count_positive_roots(&above, depth + 1)
}

/// Random matrix with entries uniform in [-9, 9].
pub fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize) -> Matrix<Int> {
    let data: Vec<Int> = (0..rows * cols)
        .map(|_| Int::from(rng.gen_range(-9i64..=9)))
        .collect();
    Matrix::new(rows, cols, data).expect("shape matches")
}

/// Random nonzero polynomial of degree <= max_degree, coefficients in
/// [-9, 9].
pub fn random_poly(rng: &mut StdRng, max_degree: usize) -> Poly<Int> {
    loop {
        let deg = rng.gen_range(0..=max_degree);
        let coeffs: Vec<Int> = (0..=deg)
            .map(|_| Int::from(rng.gen_range(-9i64..=9)))
            .collect();
        let p = Poly::new(coeffs);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Random word of at most `max_letters` letters over `alphabet_len`
/// generators (not reduced).
pub fn random_word(rng: &mut StdRng, alphabet_len: usize, max_letters: usize) -> Word {
    let len = rng.gen_range(0..=max_letters);
    Word::from_runs((0..len).map(|_| {
        (
            rng.gen_range(0..alphabet_len),
            if rng.gen_bool(0.5) { 1i64 } else { -1 },
        )
    }))
}

/// Random tangle word entries with sum(|a_i|) <= budget and nonzero entries.
pub fn random_tangle_entries(rng: &mut StdRng, budget: u64) -> Vec<i64> {
    let mut remaining = rng.gen_range(1..=budget) as i64;
    let mut entries = Vec::new();
    while remaining > 0 {
        let mag = rng.gen_range(1..=remaining.min(4));
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        entries.push(sign * mag);
        remaining -= mag;
    }
    entries
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_on_known_roots() {
        // (t-1)(t-2)(t+3) has 2 positive roots
        let p = Poly::<Int>::from_i64(&[6, -7, 0, 1]);
        assert_eq!(bisection_positive_root_count(&p), 2);
        // t^2+1: none
        assert_eq!(
            bisection_positive_root_count(&Poly::<Int>::from_i64(&[1, 0, 1])),
            0
        );
        // golden quadratics
        assert_eq!(
            bisection_positive_root_count(&Poly::<Int>::from_i64(&[1, -3, 1])),
            2
        );
        assert_eq!(
            bisection_positive_root_count(&Poly::<Int>::from_i64(&[1, -1, 1])),
            0
        );
        // root exactly at 1 and a cluster: (t-1)(t-2)(t-3)
        let p = Poly::<Int>::from_i64(&[-6, 11, -6, 1]);
        assert_eq!(bisection_positive_root_count(&p), 3);
        // repeated roots count once: (t-1)^2
        assert_eq!(
            bisection_positive_root_count(&Poly::<Int>::from_i64(&[1, -2, 1])),
            1
        );
    }

    #[test]
    fn seeded_rng_is_reproducible() {
        let a: Vec<i64> = {
            let mut rng = corpus_rng();
            (0..5).map(|_| rng.gen_range(0..100)).collect()
        };
        let b: Vec<i64> = {
            let mut rng = corpus_rng();
            (0..5).map(|_| rng.gen_range(0..100)).collect()
        };
        assert_eq!(a, b);
    }
}
