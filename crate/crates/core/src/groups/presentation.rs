use super::{Slope, Word};
use crate::diagrams::{validate, writhe, PlanarDiagram};
use crate::error::{Error, Result};
use crate::exact::{coker_element_order, snf, Matrix};
use crate::{Int, IntMatrix};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

pub const MARK_MERIDIAN: &str = "meridian";
pub const MARK_LONGITUDE: &str = "longitude";

/// Finitely presented group with optional named marked words.
///
/// Text format: `<x1,x2 | x1 x2 X1 X2; meridian=x1; longitude=1>` with
/// uppercase denoting inverses; parse/print round-trips exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: Vec<String>,
    relators: Vec<Word>,
    markings: BTreeMap<String, Word>,
}

fn valid_generator_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit())
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        for name in &generators {
            if !valid_generator_name(name) {
                return Err(Error::Parse(format!("bad generator name `{name}`")));
            }
        }
        if generators
            .iter()
            .enumerate()
            .any(|(i, g)| generators[..i].contains(g))
        {
            return Err(Error::Parse("duplicate generator name".into()));
        }
        let p = Self {
            generators,
            relators: Vec::new(),
            markings: BTreeMap::new(),
        };
        relators
            .iter()
            .try_for_each(|r| p.check_word(r))
            .map(|()| Self { relators, ..p })
    }

    fn check_word(&self, w: &Word) -> Result<()> {
        match w.max_generator() {
            Some(g) if g >= self.generators.len() => Err(Error::UnknownGenerator {
                index: g,
                alphabet_len: self.generators.len(),
            }),
            _ => Ok(()),
        }
    }

    pub fn with_marking(mut self, name: &str, word: Word) -> Result<Self> {
        self.check_word(&word)?;
        self.markings.insert(name.to_string(), word);
        Ok(self)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn markings(&self) -> &BTreeMap<String, Word> {
        &self.markings
    }

    pub fn marking(&self, name: &str) -> Result<&Word> {
        self.markings
            .get(name)
            .ok_or_else(|| Error::MissingMarking(name.to_string()))
    }

    pub fn push_relator(&mut self, r: Word) -> Result<()> {
        self.check_word(&r)?;
        self.relators.push(r);
        Ok(())
    }

    /// Abelianized relator matrix: rows = generators, columns = relators,
    /// entries = exponent sums.
    pub fn relator_matrix(&self) -> IntMatrix {
        let g = self.generators.len();
        let r = self.relators.len();
        let mut m = Matrix::zero(g, r);
        for (j, rel) in self.relators.iter().enumerate() {
            let sums = rel
                .exponent_sums(g)
                .expect("relators checked at construction");
            for (i, s) in sums.into_iter().enumerate() {
                m[(i, j)] = s;
            }
        }
        m
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} | ", self.generators.join(","))?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", r.display(&self.generators))?;
        }
        for (name, w) in &self.markings {
            write!(f, "; {}={}", name, w.display(&self.generators))?;
        }
        write!(f, ">")
    }
}

impl FromStr for GroupPresentation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('<')
            .and_then(|b| b.strip_suffix('>'))
            .ok_or_else(|| Error::Parse(format!("presentation must be <...>: `{s}`")))?;
        let (gens, rest) = inner
            .split_once('|')
            .ok_or_else(|| Error::Parse("missing `|` separator".into()))?;
        let generators: Vec<String> = gens
            .split(',')
            .map(|g| g.trim().to_string())
            .filter(|g| !g.is_empty())
            .collect();
        let mut sections = rest.split(';');
        let relator_text = sections.next().unwrap_or("");
        let mut p = GroupPresentation::new(generators, Vec::new())?;
        for rel in relator_text.split(',') {
            let rel = rel.trim();
            if rel.is_empty() {
                continue;
            }
            let w = Word::parse(rel, &p.generators)?;
            p.push_relator(w)?;
        }
        for marking in sections {
            let (name, word) = marking
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad marking `{marking}`")))?;
            let w = Word::parse(word, &p.generators)?;
            p = p.with_marking(name.trim(), w)?;
        }
        Ok(p)
    }
}

/// Wirtinger presentation of a validated single-component diagram: one
/// generator per arc (`x1`, `x2`, ...), one conjugation relator per crossing,
/// with both the meridian (basepoint arc) and the 0-framed longitude marked.
pub fn wirtinger(d: &PlanarDiagram) -> Result<GroupPresentation> {
    let report = validate(d);
    if !report.ok {
        return Err(Error::InvalidDiagram(
            report.first_violation.unwrap_or_default(),
        ));
    }
    if d.component_count() != 1 {
        return Err(Error::MultiComponent {
            components: d.component_count(),
        });
    }
    let n = d.arc_count();
    let generators: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let mut relators = Vec::with_capacity(d.crossings().len());
    for c in d.crossings() {
        let o = c.over();
        let (a, b) = (c.under_in(), c.under_out());
        // b = o^sign a o^-sign, written as the relator o^s a o^-s b^-1.
        let s = c.sign as i64;
        relators.push(Word::from_runs([(o, s), (a, 1), (o, -s), (b, -1)]));
    }
    let p = GroupPresentation::new(generators, relators)?
        .with_marking(MARK_MERIDIAN, Word::generator(0))?;
    let lambda = longitude(d)?;
    p.with_marking(MARK_LONGITUDE, lambda)
}

/// 0-framed longitude in Wirtinger generators: traverse the knot from the
/// basepoint arc, record the over-arc generator (to the crossing sign) at
/// each undercrossing, then append meridian^(-writhe). Total exponent sum 0.
pub fn longitude(d: &PlanarDiagram) -> Result<Word> {
    let report = validate(d);
    if !report.ok {
        return Err(Error::InvalidDiagram(
            report.first_violation.unwrap_or_default(),
        ));
    }
    if d.crossings().is_empty() {
        return Ok(Word::identity());
    }
    let mut runs: Vec<(usize, i64)> = Vec::new();
    let mut arc = 0usize;
    loop {
        let c = d
            .crossings()
            .iter()
            .find(|c| c.under_in() == arc)
            .expect("validated diagram pairs every arc");
        runs.push((c.over(), c.sign as i64));
        arc = c.under_out();
        if arc == 0 {
            break;
        }
    }
    runs.push((0, -writhe(d)));
    Ok(Word::from_runs(runs))
}

/// Dehn filling: add the relator mu^p lambda^q built from the marked
/// meridian and longitude.
pub fn fill(p: &GroupPresentation, slope: &Slope) -> Result<GroupPresentation> {
    let mu = p.marking(MARK_MERIDIAN)?.clone();
    let lambda = p.marking(MARK_LONGITUDE)?.clone();
    let pe = i64::try_from(slope.p()).map_err(|_| {
        Error::UnreducedSlope(format!("slope numerator too large: {}", slope.p()))
    })?;
    let qe = i64::try_from(slope.q()).map_err(|_| {
        Error::UnreducedSlope(format!("slope denominator too large: {}", slope.q()))
    })?;
    let relator = mu.pow(pe).concat(&lambda.pow(qe));
    let mut out = p.clone();
    out.push_relator(relator)?;
    Ok(out)
}

/// Invariant factors of the abelianization: entries != 1 in the divisibility
/// chain, with one 0 per infinite-cyclic summand.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianInvariants {
    pub factors: Vec<Int>,
}

impl AbelianInvariants {
    pub fn from_i64(factors: &[i64]) -> Self {
        Self {
            factors: factors.iter().map(|&f| Int::from(f)).collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_infinite_cyclic(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].is_zero()
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// First homology of the presented group via Smith normal form of the
/// abelianized relator matrix.
pub fn h1(p: &GroupPresentation) -> AbelianInvariants {
    let m = p.relator_matrix();
    let decomposition = snf(&m);
    let mut factors: Vec<Int> = decomposition
        .invariant_factors()
        .into_iter()
        .filter(|f| !f.is_one())
        .collect();
    let free_rank = p.generators.len() - decomposition.rank();
    factors.extend((0..free_rank).map(|_| Int::zero()));
    AbelianInvariants { factors }
}

/// Order of the image of `w` in the abelianization (0 = infinite order).
pub fn element_h1_order(p: &GroupPresentation, w: &Word) -> Result<Int> {
    let v = w.exponent_sums(p.generators.len())?;
    coker_element_order(&p.relator_matrix(), &v)
}
