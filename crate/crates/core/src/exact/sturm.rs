use super::{Poly, Scalar};
use crate::error::{Error, Result};

/// Sign of a chain polynomial as t -> 0+ : sign of the lowest nonzero
/// coefficient. As t -> +inf : sign of the leading coefficient.
fn sign_at_zero_plus<T: Scalar>(p: &Poly<T>) -> i8 {
    match p.lowest_nonzero() {
        None => 0,
        Some((_, c)) => {
            if c.is_negative() {
                -1
            } else {
                1
            }
        }
    }
}

fn sign_at_infinity<T: Scalar>(p: &Poly<T>) -> i8 {
    match p.leading() {
        None => 0,
        Some(c) => {
            if c.is_negative() {
                -1
            } else {
                1
            }
        }
    }
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let nonzero: Vec<i8> = signs.filter(|s| *s != 0).collect();
    nonzero.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Sturm chain of the square-free part, kept over Z[t] with pseudo-remainders
/// whose signs are corrected to match true polynomial remainders, then divided
/// by their (positive) content to control growth.
fn sturm_chain<T: Scalar>(p: &Poly<T>) -> Vec<Poly<T>> {
    let sf = p.square_free_part();
    let mut chain = vec![sf.clone()];
    if sf.degree().is_none_or(|d| d == 0) {
        return chain;
    }
    chain.push(sf.derivative());
    loop {
        let f = &chain[chain.len() - 2];
        let g = &chain[chain.len() - 1];
        if g.is_zero() || f.degree() < g.degree() {
            break;
        }
        let delta = f.degree().unwrap() - g.degree().unwrap();
        let lead_negative = g.leading().unwrap().is_negative();
        let multiplier_negative = lead_negative && delta % 2 == 0; // lc^(delta+1) < 0
        let mut r = f.pseudo_rem(g);
        if !multiplier_negative {
            r = r.neg();
        }
        let r = r.primitive_part();
        if r.is_zero() {
            break;
        }
        chain.push(r);
    }
    chain
}

/// Number of distinct real roots of `p` in the open interval (0, +inf),
/// computed exactly: sign variations of the Sturm chain at 0+ minus at +inf.
pub fn positive_real_root_count<T: Scalar>(p: &Poly<T>) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let chain = sturm_chain(p);
    let at_zero = sign_changes(chain.iter().map(sign_at_zero_plus));
    let at_inf = sign_changes(chain.iter().map(sign_at_infinity));
    debug_assert!(at_zero >= at_inf, "Sturm variation must not increase");
    Ok(at_zero - at_inf)
}
