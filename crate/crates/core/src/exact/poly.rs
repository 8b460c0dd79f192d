use super::Scalar;
use std::fmt;

/// Dense integer polynomial, constant term first, trailing coefficient
/// nonzero unless the polynomial is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::new(vec![T::one()])
    }

    pub fn monomial(coeff: T, exp: usize) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); exp + 1];
        coeffs[exp] = coeff;
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// (index, coefficient) of the lowest-order nonzero term.
    pub fn lowest_nonzero(&self) -> Option<(usize, &T)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = out[i + j].clone() + a.clone() * b.clone();
                out[i + j] = t;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Coefficient reversal t^deg * p(1/t).
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::new(coeffs)
    }

    /// p(t + 1), exactly.
    pub fn shift_by_one(&self) -> Self {
        let shift = Self::from_i64(&[1, 1]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| {
                acc.mul(&shift).add(&Self::new(vec![c.clone()]))
            })
    }

    /// Positive gcd of all coefficients (0 for the zero polynomial).
    pub fn content(&self) -> T {
        self.coeffs
            .iter()
            .fold(T::zero(), |acc, c| acc.gcd(c))
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        Self {
            coeffs: self.coeffs.iter().map(|a| a.clone() / c.clone()).collect(),
        }
    }

    /// Exact division; `None` when `rhs` does not divide `self` over the
    /// integers.
    pub fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (dr, dd) = (self.degree()?, rhs.degree()?);
        if dr < dd {
            return None;
        }
        let lead = rhs.leading()?.clone();
        let mut rem = self.clone();
        let mut quot = vec![T::zero(); dr - dd + 1];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                return None;
            }
            let (q, r) = rem.leading()?.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            quot[rd - dd] = q.clone();
            rem = rem.sub(&rhs.mul(&Self::monomial(q, rd - dd)));
            if rem.is_zero() {
                return Some(Self::new(quot));
            }
        }
        None
    }

    /// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f = q*g + r with
    /// deg r < deg g. Requires g nonzero and deg f >= deg g.
    pub fn pseudo_rem(&self, g: &Self) -> Self {
        let df = self.degree().expect("pseudo_rem of zero dividend");
        let dg = g.degree().expect("pseudo_rem by zero divisor");
        assert!(df >= dg);
        let lead = g.leading().unwrap().clone();
        let mut r = self.clone();
        let mut steps = df - dg + 1;
        while let Some(dr) = r.degree() {
            if dr < dg {
                break;
            }
            let c = r.leading().unwrap().clone();
            r = r.scale(&lead).sub(&g.mul(&Self::monomial(c, dr - dg)));
            steps -= 1;
        }
        // Pad the multiplier so the identity uses exactly lc^(df-dg+1).
        for _ in 0..steps {
            r = r.scale(&lead);
        }
        r
    }

    /// Polynomial gcd over Z[t] by the primitive pseudo-remainder sequence,
    /// normalized with positive leading coefficient.
    pub fn gcd(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.sign_normalized();
        }
        if rhs.is_zero() {
            return self.sign_normalized();
        }
        let content = self.content().gcd(&rhs.content());
        let mut a = self.primitive_part();
        let mut b = rhs.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.scale(&content).sign_normalized()
    }

    /// p / gcd(p, p'): same roots, all simple.
    pub fn square_free_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        if self.degree() == Some(0) {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g)
            .expect("gcd(p, p') divides p")
    }

    /// Sign-normalize so the leading coefficient is positive.
    pub fn sign_normalized(&self) -> Self {
        match self.leading() {
            Some(l) if l.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// True when q = ±t^k * p for some k, i.e. equality up to the Laurent
    /// unit normalization used throughout.
    pub fn eq_up_to_unit(&self, rhs: &Self) -> bool {
        let a = self.lowered();
        let b = rhs.lowered();
        a == b || a == b.neg()
    }

    /// Strip the largest power of t dividing p.
    pub fn lowered(&self) -> Self {
        match self.lowest_nonzero() {
            None => Self::zero(),
            Some((k, _)) => Self::new(self.coeffs[k..].to_vec()),
        }
    }
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{}", a)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", a)?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{}", i)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}
