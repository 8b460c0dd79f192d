//! Rational-tangle and Montesinos descriptor calculus: continued fractions
//! under explicit evaluation conventions, the `K_n` family, two-bridge
//! normalization/classification, and the gcd-based tunnel/rank criteria.

use crate::error::{Error, Result};
use crate::{int, Fraction, Int};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Registered continued-fraction evaluation conventions.
///
/// `Default` is right-nested `a_1 + 1/(a_2 + 1/(...))` reading entries left
/// to right; `Reversed` evaluates the reversed entry sequence under
/// `Default`; `Negative` is `a_1 - 1/(a_2 - 1/(...))`. The tag travels with
/// the word so every evaluation is auditable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    #[default]
    Default,
    Reversed,
    Negative,
}

impl Convention {
    pub const ALL: [Convention; 3] = [
        Convention::Default,
        Convention::Reversed,
        Convention::Negative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Convention::Default => "default",
            Convention::Reversed => "reversed",
            Convention::Negative => "negative",
        }
    }
}

impl FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "default" => Ok(Convention::Default),
            "reversed" => Ok(Convention::Reversed),
            "negative" => Ok(Convention::Negative),
            other => Err(Error::Parse(format!("unknown convention `{other}`"))),
        }
    }
}

/// Bracket word of nonzero integers plus its evaluation convention.
///
/// Text syntax: `[2,-2,2]` with an optional `@convention` suffix, e.g.
/// `[2,-2,2]@default`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TangleWord {
    entries: Vec<i64>,
    convention: Convention,
}

impl TangleWord {
    pub fn new(entries: Vec<i64>, convention: Convention) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Parse("tangle word must be non-empty".into()));
        }
        if let Some(position) = entries.iter().position(|&a| a == 0) {
            return Err(Error::ZeroTangleEntry { position });
        }
        Ok(Self { entries, convention })
    }

    pub fn with_default(entries: &[i64]) -> Result<Self> {
        Self::new(entries.to_vec(), Convention::Default)
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn crossing_count(&self) -> u64 {
        self.entries.iter().map(|a| a.unsigned_abs()).sum()
    }
}

impl fmt::Display for TangleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]@{}", self.convention.name())
    }
}

impl FromStr for TangleWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, convention) = match s.split_once('@') {
            Some((b, c)) => (b.trim(), c.trim().parse()?),
            None => (s, Convention::Default),
        };
        let inner = body
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("tangle word must be bracketed: `{s}`")))?;
        let entries = inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("bad tangle entry `{tok}`: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries, convention)
    }
}

/// Right-nested continued fraction `e_1 + 1/(e_2 + 1/(...))` over exact
/// rationals; errors name the entry whose tail evaluates to zero.
fn eval_nested(entries: &[i64], negative: bool) -> Result<Fraction> {
    let mut acc = Fraction::from(int(*entries.last().expect("non-empty")));
    for (position, &a) in entries.iter().enumerate().rev().skip(1) {
        if acc.is_zero() {
            return Err(Error::CfZeroTail { position });
        }
        let inv = acc.recip();
        acc = if negative {
            Fraction::from(int(a)) - inv
        } else {
            Fraction::from(int(a)) + inv
        };
    }
    Ok(acc)
}

/// Continued-fraction value of a tangle word under its convention tag.
pub fn cf_eval(word: &TangleWord) -> Result<Fraction> {
    match word.convention {
        Convention::Default => eval_nested(&word.entries, false),
        Convention::Reversed => {
            let mut rev = word.entries.clone();
            rev.reverse();
            eval_nested(&rev, false)
        }
        Convention::Negative => eval_nested(&word.entries, true),
    }
}

/// Expansion of a fraction into `Default`-convention entries:
/// `f = a_1 + 1/(a_2 + 1/(...))` with `a_1 = floor(f)` and all later entries
/// positive. The leading entry may be zero for |f| < 1, so the result is a
/// raw entry list rather than a `TangleWord`.
pub fn cf_expand(f: &Fraction) -> Vec<i64> {
    let mut out = Vec::new();
    let mut cur = f.clone();
    loop {
        let a = cur.floor().to_integer();
        out.push(i64::try_from(&a).expect("desk-scale entries"));
        let rem = cur - Fraction::from(a);
        if rem.is_zero() {
            return out;
        }
        cur = rem.recip();
    }
}

/// Montesinos descriptor: the fraction list `beta_i/alpha_i` with every
/// `alpha_i >= 2`, stored exactly as given (no mod-1 reduction).
///
/// Text syntax: `M(5/3,5/3,17/6)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MontesinosDescriptor {
    fractions: Vec<Fraction>,
}

impl MontesinosDescriptor {
    pub fn new(fractions: Vec<Fraction>) -> Result<Self> {
        if fractions.is_empty() {
            return Err(Error::EmptyDescriptor);
        }
        for f in &fractions {
            if *f.denom() < int(2) {
                return Err(Error::SmallTangleDenominator(f.to_string()));
            }
        }
        Ok(Self { fractions })
    }

    pub fn fractions(&self) -> &[Fraction] {
        &self.fractions
    }

    pub fn len(&self) -> usize {
        self.fractions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fractions.is_empty()
    }
}

impl fmt::Display for MontesinosDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M(")?;
        for (i, x) in self.fractions.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}/{}", x.numer(), x.denom())?;
        }
        write!(f, ")")
    }
}

impl FromStr for MontesinosDescriptor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix("M(")
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("descriptor must look like M(...): `{s}`")))?;
        let fractions = inner
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                let (n, d) = tok
                    .split_once('/')
                    .ok_or_else(|| Error::Parse(format!("bad fraction `{tok}`")))?;
                let n: Int = n
                    .trim()
                    .parse()
                    .map_err(|e| Error::Parse(format!("bad numerator `{n}`: {e}")))?;
                let d: Int = d
                    .trim()
                    .parse()
                    .map_err(|e| Error::Parse(format!("bad denominator `{d}`: {e}")))?;
                if d.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in `{tok}`")));
                }
                Ok(Fraction::new(n, d))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(fractions)
    }
}

/// The Montesinos family `K_n`: fractions 5/3 repeated n-1 times, then 17/6.
/// The fraction list is the authoritative definition here; the bracket words
/// [2,-2,2] and [-6,4] are annotation (see [`convention_search`]).
pub fn kn_descriptor(n: i64) -> Result<MontesinosDescriptor> {
    if n < 2 {
        return Err(Error::FamilyIndexTooSmall(n));
    }
    let mut fractions = vec![crate::frac(5, 3); (n - 1) as usize];
    fractions.push(crate::frac(17, 6));
    MontesinosDescriptor::new(fractions)
}

/// Bracket words attached to the family: [2,-2,2] for the first n-1 tangles
/// and [-6,4] for the last; annotation only.
pub fn kn_bracket_words(n: i64) -> Result<Vec<TangleWord>> {
    if n < 2 {
        return Err(Error::FamilyIndexTooSmall(n));
    }
    let mut words = vec![TangleWord::with_default(&[2, -2, 2])?; (n - 1) as usize];
    words.push(TangleWord::with_default(&[-6, 4])?);
    Ok(words)
}

/// The two-bridge form of `K_2` in Conway notation: C(2,-2,6,-7,1).
pub fn k2_two_bridge_word() -> TangleWord {
    TangleWord::with_default(&[2, -2, 6, -7, 1]).expect("constant word")
}

/// gcd of the tangle denominators `alpha_i`.
pub fn gcd_alpha(d: &MontesinosDescriptor) -> Int {
    d.fractions
        .iter()
        .fold(Int::zero(), |acc, f| acc.gcd(f.denom()))
}

/// One criterion conclusion: statement, literature citation, the hypothesis
/// names it depends on, and whether it holds for the given input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conclusion {
    pub statement: String,
    pub citation: String,
    pub hypotheses: Vec<String>,
    pub holds: bool,
}

/// Hypothesis-checked theorem applications. Conclusions are citation-backed,
/// never independently computed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriteriaReport {
    pub hypothesis_checks: BTreeMap<String, bool>,
    pub conclusions: Vec<Conclusion>,
}

impl CriteriaReport {
    /// Every conclusion that holds must have all of its hypotheses true.
    pub fn is_consistent(&self) -> bool {
        self.conclusions.iter().all(|c| {
            !c.holds
                || c.hypotheses
                    .iter()
                    .all(|h| self.hypothesis_checks.get(h).copied().unwrap_or(false))
        })
    }
}

const CITE_LM_TUNNEL: &str = "Lustig-Moriah, Theorem 0.1(1): tunnel number of Montesinos knots via the gcd of the tangle denominators";
const CITE_LM_RANK: &str = "Lustig-Moriah, Theorem 0.1(3): Heegaard genus and rank of even Dehn fillings of Montesinos knots";

/// Apply the gcd criteria: tunnel number = length - 1 when gcd(alpha) != 1,
/// and (when a slope is supplied) genus = rank = length when additionally p
/// is even. Conclusions with failed hypotheses are emitted with holds=false.
pub fn lm_criteria(d: &MontesinosDescriptor, slope: Option<&Fraction>) -> CriteriaReport {
    let n = d.len();
    let gcd_nontrivial = !gcd_alpha(d).is_one();
    let mut hypothesis_checks = BTreeMap::new();
    hypothesis_checks.insert("gcd_alpha_nontrivial".to_string(), gcd_nontrivial);

    let mut conclusions = vec![Conclusion {
        statement: format!(
            "the tunnel number of the Montesinos knot is {} (exterior Heegaard genus {})",
            n - 1,
            n
        ),
        citation: CITE_LM_TUNNEL.to_string(),
        hypotheses: vec!["gcd_alpha_nontrivial".to_string()],
        holds: gcd_nontrivial,
    }];

    if let Some(s) = slope {
        let p_even = s.numer().is_even();
        hypothesis_checks.insert("p_even".to_string(), p_even);
        conclusions.push(Conclusion {
            statement: format!(
                "the filled manifold has Heegaard genus {n} and fundamental group of rank {n}"
            ),
            citation: CITE_LM_RANK.to_string(),
            hypotheses: vec!["gcd_alpha_nontrivial".to_string(), "p_even".to_string()],
            holds: gcd_nontrivial && p_even,
        });
    }

    CriteriaReport {
        hypothesis_checks,
        conclusions,
    }
}

/// Normal form p/q' with 0 < q' < p and q' = q (mod p); requires the knot
/// case: odd numerator of absolute value at least 3. A negative numerator is
/// normalized away by negating the pair first.
pub fn two_bridge_normalize(f: &Fraction) -> Result<Fraction> {
    let (mut p, mut q) = (f.numer().clone(), f.denom().clone());
    if p.is_negative() {
        p = -p;
        q = -q;
    }
    if p.is_even() || p < int(3) {
        return Err(Error::NotTwoBridgeKnot(format!(
            "{}/{}",
            f.numer(),
            f.denom()
        )));
    }
    let qn = q.mod_floor(&p);
    if qn.is_zero() {
        // gcd(p, q) = 1 and p >= 3 exclude this, but keep the guard total.
        return Err(Error::NotTwoBridgeKnot(format!("{}/{}", p, q)));
    }
    Ok(Fraction::new(p, qn))
}

/// Two-bridge classification: p1 = p2 and q2 = q1^{+-1} (mod p1). Unoriented
/// and chirality-sensitive; set `up_to_mirror` to widen by q2 = -q1^{+-1}.
pub fn two_bridge_equivalent_with(
    f1: &Fraction,
    f2: &Fraction,
    up_to_mirror: bool,
) -> Result<bool> {
    let a = two_bridge_normalize(f1)?;
    let b = two_bridge_normalize(f2)?;
    if a.numer() != b.numer() {
        return Ok(false);
    }
    let p = a.numer().clone();
    let (q1, q2) = (a.denom().clone(), b.denom().clone());
    let mut classes = vec![q1.clone()];
    // gcd(q1, p) = 1, so q1 is invertible mod p.
    let inv = mod_inverse(&q1, &p).expect("reduced fraction");
    classes.push(inv);
    if up_to_mirror {
        for c in classes.clone() {
            classes.push((-c).mod_floor(&p));
        }
    }
    Ok(classes.into_iter().any(|c| c == q2))
}

/// Chirality-sensitive two-bridge equivalence.
pub fn two_bridge_equivalent(f1: &Fraction, f2: &Fraction) -> Result<bool> {
    two_bridge_equivalent_with(f1, f2, false)
}

/// Is the fraction the two-bridge form of a torus knot T(2,p)? Tests both
/// chirality representatives p/1 and p/(p-1).
pub fn is_two_bridge_torus(f: &Fraction) -> Result<bool> {
    let n = two_bridge_normalize(f)?;
    let p = n.numer().clone();
    let right = two_bridge_equivalent(&n, &Fraction::new(p.clone(), Int::one()))?;
    let left = two_bridge_equivalent(&n, &Fraction::new(p.clone(), p - 1))?;
    Ok(right || left)
}

fn mod_inverse(a: &Int, m: &Int) -> Option<Int> {
    let e = a.extended_gcd(m);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(m))
}

/// One convention-search hit: which convention and entry-order/sign variant
/// of a bracket word reproduces a target value, exactly or mod 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConventionMatch {
    pub convention: Convention,
    pub reversed_entries: bool,
    pub negated_entries: bool,
    pub value: Fraction,
    pub exact: bool,
}

/// Brute-force search over the registered conventions and entry-order/sign
/// variants for evaluations matching `target` (exactly or mod 1). Used to
/// audit how bracket words bind to fractions.
pub fn convention_search(entries: &[i64], target: &Fraction) -> Vec<ConventionMatch> {
    let mut hits = Vec::new();
    for convention in Convention::ALL {
        for reversed_entries in [false, true] {
            for negated_entries in [false, true] {
                let mut e = entries.to_vec();
                if reversed_entries {
                    e.reverse();
                }
                if negated_entries {
                    for a in &mut e {
                        *a = -*a;
                    }
                }
                let Ok(word) = TangleWord::new(e, convention) else {
                    continue;
                };
                let Ok(value) = cf_eval(&word) else {
                    continue;
                };
                let exact = &value == target;
                let mod_one = (value.clone() - target.clone()).is_integer();
                if exact || mod_one {
                    hits.push(ConventionMatch {
                        convention,
                        reversed_entries,
                        negated_entries,
                        value,
                        exact,
                    });
                }
            }
        }
    }
    hits
}
