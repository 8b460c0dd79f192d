use crate::error::{Error, Result};
use crate::Int;
use num_traits::Zero;

/// Group word over an indexed alphabet. Stored as exponent runs
/// `(generator index, nonzero exponent)`; adjacent runs of the same generator
/// and sign are merged on construction, so `m m m` and `m^3` are the same
/// value, but no free cancellation happens implicitly — that is
/// [`Word::free_reduce`]'s job.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    runs: Vec<(usize, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(index: usize) -> Self {
        Self {
            runs: vec![(index, 1)],
        }
    }

    /// Canonicalize: drop zero exponents, merge adjacent same-sign runs of
    /// the same generator.
    pub fn from_runs(runs: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for (g, e) in runs {
            if e == 0 {
                continue;
            }
            match out.last_mut() {
                Some((lg, le)) if *lg == g && le.signum() == e.signum() => *le += e,
                _ => out.push((g, e)),
            }
        }
        Self { runs: out }
    }

    pub fn is_identity(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn runs(&self) -> &[(usize, i64)] {
        &self.runs
    }

    /// Letters `(generator, +-1)` in order.
    pub fn letters(&self) -> impl Iterator<Item = (usize, i8)> + '_ {
        self.runs.iter().flat_map(|&(g, e)| {
            let sign = if e > 0 { 1i8 } else { -1 };
            (0..e.unsigned_abs()).map(move |_| (g, sign))
        })
    }

    pub fn letter_len(&self) -> u64 {
        self.runs.iter().map(|&(_, e)| e.unsigned_abs()).sum()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.runs.iter().map(|&(g, _)| g).max()
    }

    pub fn concat(&self, rhs: &Self) -> Self {
        Self::from_runs(self.runs.iter().chain(rhs.runs.iter()).copied())
    }

    pub fn inverse(&self) -> Self {
        Self::from_runs(self.runs.iter().rev().map(|&(g, e)| (g, -e)))
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k >= 0 { self.clone() } else { self.inverse() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    pub fn conjugated_by(&self, c: &Self) -> Self {
        c.concat(self).concat(&c.inverse())
    }

    /// The unique reduced word freely equal to this one: no `g g^-1` pairs
    /// remain. Idempotent and length-non-increasing.
    pub fn free_reduce(&self) -> Self {
        let mut stack: Vec<(usize, i64)> = Vec::new();
        for &(g, e) in &self.runs {
            match stack.last_mut() {
                Some((tg, te)) if *tg == g => {
                    *te += e;
                    if *te == 0 {
                        stack.pop();
                    }
                }
                _ => stack.push((g, e)),
            }
        }
        Self { runs: stack }
    }

    /// Cyclically reduced form of an already freely reduced word.
    pub fn cyclic_reduce(&self) -> Self {
        let mut w = self.free_reduce();
        loop {
            let n = w.runs.len();
            if n < 2 {
                return w;
            }
            let (fg, fe) = w.runs[0];
            let (lg, le) = w.runs[n - 1];
            if fg != lg || fe.signum() == le.signum() {
                return w;
            }
            // strip min(|fe|, |le|) letters from both ends
            let k = fe.abs().min(le.abs());
            let mut runs = w.runs.clone();
            runs[0].1 -= k * fe.signum();
            runs[n - 1].1 -= k * le.signum();
            runs.retain(|&(_, e)| e != 0);
            w = Self::from_runs(runs).free_reduce();
        }
    }

    /// Exponent-sum vector over an alphabet of `n` generators.
    pub fn exponent_sums(&self, n: usize) -> Result<Vec<Int>> {
        let mut sums = vec![Int::zero(); n];
        for &(g, e) in &self.runs {
            if g >= n {
                return Err(Error::UnknownGenerator {
                    index: g,
                    alphabet_len: n,
                });
            }
            sums[g] += Int::from(e);
        }
        Ok(sums)
    }

    pub fn exponent_sum_total(&self) -> i64 {
        self.runs.iter().map(|&(_, e)| e).sum()
    }

    /// Substitute `replacement` for generator `target`, leaving other letters
    /// alone. The result is not reduced.
    pub fn substitute(&self, target: usize, replacement: &Word) -> Self {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for &(g, e) in &self.runs {
            if g != target {
                out.push((g, e));
                continue;
            }
            let block = replacement.pow(e.signum());
            for _ in 0..e.unsigned_abs() {
                out.extend(block.runs.iter().copied());
            }
        }
        Self::from_runs(out)
    }

    /// Rewrite generator indices; used when an alphabet shrinks.
    pub fn remap(&self, map: impl Fn(usize) -> usize) -> Self {
        Self::from_runs(self.runs.iter().map(|&(g, e)| (map(g), e)))
    }

    /// Render against an alphabet: space-separated letters, uppercase for
    /// inverses, `1` for the identity.
    pub fn display(&self, alphabet: &[String]) -> String {
        if self.is_identity() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (g, s) in self.letters() {
            let name = alphabet.get(g).map(String::as_str).unwrap_or("?");
            if s > 0 {
                parts.push(name.to_string());
            } else {
                parts.push(name.to_uppercase());
            }
        }
        parts.join(" ")
    }

    /// Parse space-separated letters; uppercase means inverse, `1` alone is
    /// the identity.
    pub fn parse(text: &str, alphabet: &[String]) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "1" {
            return Ok(Self::identity());
        }
        let mut runs = Vec::new();
        for tok in text.split_whitespace() {
            let inverse = tok.chars().next().is_some_and(|c| c.is_ascii_uppercase());
            let name = tok.to_lowercase();
            let idx = alphabet
                .iter()
                .position(|g| *g == name)
                .ok_or_else(|| Error::Parse(format!("unknown generator `{tok}`")))?;
            runs.push((idx, if inverse { -1 } else { 1 }));
        }
        Ok(Self::from_runs(runs))
    }
}
