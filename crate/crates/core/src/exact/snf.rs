use super::{Matrix, Scalar};
use crate::error::{Error, Result};

/// Smith normal form decomposition: `d = u * m * v` with `u`, `v` unimodular
/// and `d` diagonal, entries non-negative with `d_1 | d_2 | ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snf<T> {
    pub u: Matrix<T>,
    pub d: Matrix<T>,
    pub v: Matrix<T>,
}

impl<T: Scalar> Snf<T> {
    /// Nonzero diagonal entries, i.e. the invariant factors of the cokernel.
    pub fn invariant_factors(&self) -> Vec<T> {
        self.d
            .diagonal()
            .into_iter()
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Pivot: smallest absolute value among nonzero entries of the trailing
/// submatrix, ties broken by lowest (row, col).
fn pick_pivot<T: Scalar>(d: &Matrix<T>, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(T, usize, usize)> = None;
    for i in k..d.rows() {
        for j in k..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            let a = x.abs();
            match &best {
                Some((b, _, _)) if *b <= a => {}
                _ => best = Some((a, i, j)),
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Smith normal form over the integers. Total: zero-sized matrices yield
/// empty diagonals and identity transforms.
pub fn snf<T: Scalar>(m: &Matrix<T>) -> Snf<T> {
    let rows = m.rows();
    let cols = m.cols();
    let mut d = m.clone();
    let mut u = Matrix::<T>::identity(rows);
    let mut v = Matrix::<T>::identity(cols);

    let mut k = 0;
    while k < rows.min(cols) {
        let Some((pi, pj)) = pick_pivot(&d, k) else {
            break;
        };
        d.swap_rows(k, pi);
        u.swap_rows(k, pi);
        d.swap_cols(k, pj);
        v.swap_cols(k, pj);

        // Euclidean reduction of row k and column k against the pivot.
        // Nonzero remainders become strictly smaller pivots on the next pass.
        let mut clean = true;
        for i in k + 1..rows {
            if d[(i, k)].is_zero() {
                continue;
            }
            let q = d[(i, k)].div_floor(&d[(k, k)]);
            d.add_row_multiple(i, k, &-q.clone());
            u.add_row_multiple(i, k, &-q);
            if !d[(i, k)].is_zero() {
                clean = false;
            }
        }
        for j in k + 1..cols {
            if d[(k, j)].is_zero() {
                continue;
            }
            let q = d[(k, j)].div_floor(&d[(k, k)]);
            d.add_col_multiple(j, k, &-q.clone());
            v.add_col_multiple(j, k, &-q);
            if !d[(k, j)].is_zero() {
                clean = false;
            }
        }
        if !clean {
            continue;
        }

        // Divisibility: the pivot must divide the trailing submatrix before
        // we advance, otherwise fold an offending row in and keep reducing.
        let offender = (k + 1..rows)
            .flat_map(|i| (k + 1..cols).map(move |j| (i, j)))
            .find(|&(i, j)| !d[(i, j)].clone().mod_floor(&d[(k, k)]).is_zero());
        if let Some((i, _)) = offender {
            d.add_row_multiple(k, i, &T::one());
            u.add_row_multiple(k, i, &T::one());
            continue;
        }

        if d[(k, k)].is_negative() {
            d.negate_row(k);
            u.negate_row(k);
        }
        k += 1;
    }

    Snf { u, d, v }
}

/// Order of `v` in the cokernel `Z^rows / colspan(m)`: the minimal `t >= 1`
/// with `t * v` inside the column lattice, or 0 when no such `t` exists.
pub fn coker_element_order<T: Scalar>(m: &Matrix<T>, v: &[T]) -> Result<T> {
    if v.len() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "vector length {} vs {} matrix rows",
            v.len(),
            m.rows()
        )));
    }
    let decomposition = snf(m);
    let w = decomposition.u.mul_vec(v)?;
    let diag = decomposition.d.diagonal();
    let mut order = T::one();
    for (i, wi) in w.iter().enumerate() {
        let di = diag.get(i).cloned().unwrap_or_else(T::zero);
        if di.is_zero() {
            if !wi.is_zero() {
                return Ok(T::zero()); // infinite order
            }
            continue;
        }
        // t * wi must be divisible by di, so t_i = di / gcd(di, wi).
        let ti = di.clone() / di.gcd(wi);
        order = order.lcm(&ti);
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn check_snf(m: &Matrix<i64>) {
        let s = snf(m);
        assert_eq!(s.u.mul(m).unwrap().mul(&s.v).unwrap(), s.d);
        assert_eq!(s.u.determinant().unwrap().abs(), 1);
        assert_eq!(s.v.determinant().unwrap().abs(), 1);
        assert!(s.d.is_diagonal());
        let diag = s.d.diagonal();
        for w in diag.windows(2) {
            assert!(w[0] >= 0 && w[1] >= 0);
            if !w[0].is_zero() {
                assert_eq!(w[1] % w[0], 0, "divisibility chain broken in {:?}", diag);
            } else {
                assert!(w[1].is_zero());
            }
        }
    }

    #[test]
    fn identity_is_fixed() {
        let m = Matrix::<i64>::identity(2);
        let s = snf(&m);
        assert_eq!(s.d, m);
        assert_eq!(s.u, Matrix::<i64>::identity(2));
        assert_eq!(s.v, Matrix::<i64>::identity(2));
    }

    #[test]
    fn two_by_two() {
        // By hand: subtract twice row 2 from row 1, swap, clear; entry gcd 2
        // and |det| = 4 force diag(2, 2).
        let m = Matrix::<i64>::from_i64(2, 2, &[4, 6, 2, 2]).unwrap();
        let s = snf(&m);
        assert_eq!(s.d.diagonal(), vec![2, 2]);
        check_snf(&m);

        // |det| = 8 and entry gcd 2 force diag(2, 4).
        let m = Matrix::<i64>::from_i64(2, 2, &[6, 4, 4, 4]).unwrap();
        let s = snf(&m);
        assert_eq!(s.d.diagonal(), vec![2, 4]);
        check_snf(&m);
    }

    #[test]
    fn zero_matrix() {
        let m = Matrix::<i64>::from_i64(1, 1, &[0]).unwrap();
        let s = snf(&m);
        assert_eq!(s.d.diagonal(), vec![0]);
        assert!(s.invariant_factors().is_empty());
    }

    #[test]
    fn empty_shapes() {
        let m = Matrix::<i64>::zero(1, 0);
        let s = snf(&m);
        assert_eq!(s.d.rows(), 1);
        assert_eq!(s.d.cols(), 0);
        assert_eq!(s.u, Matrix::<i64>::identity(1));

        let m = Matrix::<i64>::zero(0, 0);
        let s = snf(&m);
        assert_eq!(s.d.diagonal(), Vec::<i64>::new());
    }

    #[test]
    fn coker_orders() {
        let m = Matrix::<i64>::from_i64(1, 1, &[5]).unwrap();
        assert_eq!(coker_element_order(&m, &[1]).unwrap(), 5);
        assert_eq!(coker_element_order(&m, &[0]).unwrap(), 1);
        assert_eq!(coker_element_order(&m, &[2]).unwrap(), 5);

        // No relations: Z, every nonzero class has infinite order.
        let free = Matrix::<i64>::zero(1, 0);
        assert_eq!(coker_element_order(&free, &[3]).unwrap(), 0);
        assert_eq!(coker_element_order(&free, &[0]).unwrap(), 1);

        // Z/2 + Z/4 via diag(2, 4).
        let m = Matrix::<i64>::from_i64(2, 2, &[2, 0, 0, 4]).unwrap();
        assert_eq!(coker_element_order(&m, &[1, 0]).unwrap(), 2);
        assert_eq!(coker_element_order(&m, &[0, 1]).unwrap(), 4);
        assert_eq!(coker_element_order(&m, &[1, 1]).unwrap(), 4);
        assert_eq!(coker_element_order(&m, &[0, 2]).unwrap(), 2);
    }

    #[test]
    fn coker_dimension_mismatch() {
        let m = Matrix::<i64>::from_i64(1, 1, &[5]).unwrap();
        assert!(coker_element_order(&m, &[1, 2]).is_err());
    }
}
