//! Generalized-torsion certificates: the universal witness group built from
//! singular-spanning-disk data plus a filling slope, a closed-form
//! certificate that the meridian image is generalized torsion of order
//! exactly p, a free-reduction checker for such certificates, and a bounded
//! search.
//!
//! The punctured disk with n coherent punctures gives the relation
//! `lambda = mu^-n * prod_i a_i mu a_i^-1`; filling along p/q adds
//! `mu^p lambda^q`, giving the one-relator group
//! `U(n,p,q) = < mu, a_1..a_n | mu^p (mu^-n prod a_i mu a_i^-1)^q >`
//! which maps to the fundamental group of the filled manifold. For
//! p/q >= n the relator itself is a product of exactly p conjugates of mu,
//! which is what the certificate records and the checker re-verifies.

use crate::error::{Error, Result};
use crate::groups::{
    element_h1_order, fill, h1, GroupPresentation, Slope, Word, MARK_LONGITUDE, MARK_MERIDIAN,
};
use crate::tangles::{kn_descriptor, lm_criteria, CriteriaReport, MontesinosDescriptor};
use crate::{Fraction, Int};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{HashSet, VecDeque};
use std::fmt;

/// Puncture data of a singular spanning disk. The theorem applies to
/// coherent data only: one of the two counts must be zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularDiskDatum {
    pub positive_punctures: u64,
    pub negative_punctures: u64,
    pub provenance: String,
}

impl SingularDiskDatum {
    pub fn coherent(&self) -> bool {
        self.positive_punctures == 0 || self.negative_punctures == 0
    }
}

/// Map the (0,n)-disk / negative-slope case to the (n,0)-disk /
/// positive-slope case by mirroring; identity on already-positive data.
pub fn canonicalize(
    d: &SingularDiskDatum,
    slope: &Slope,
) -> Result<(SingularDiskDatum, Slope, bool)> {
    if !d.coherent() {
        return Err(Error::NonCoherentDisk {
            pos: d.positive_punctures,
            neg: d.negative_punctures,
        });
    }
    if d.negative_punctures > 0 {
        let mirrored = SingularDiskDatum {
            positive_punctures: d.negative_punctures,
            negative_punctures: 0,
            provenance: format!("{} (mirrored)", d.provenance),
        };
        return Ok((mirrored, slope.mirrored(), true));
    }
    Ok((d.clone(), slope.clone(), false))
}

/// The universal witness group U(n, p/q) for an (n,0)-disk: free on
/// mu, a_1..a_n modulo the filling relator mu^p lambda^q with
/// lambda = mu^-n prod_i a_i mu a_i^-1. Marked words: meridian mu and the
/// disk boundary lambda as longitude.
pub fn universal_presentation(n: u64, slope: &Slope) -> Result<GroupPresentation> {
    if !slope.q().is_positive() {
        return Err(Error::NegativeSlopeDenominator(slope.to_string()));
    }
    if !slope.p().is_positive() {
        return Err(Error::SlopeBelowThreshold {
            threshold: "1/1".into(),
            slope: slope.to_string(),
        });
    }
    let mut generators = vec!["m".to_string()];
    generators.extend((1..=n).map(|i| format!("a{i}")));
    let mut lambda_runs: Vec<(usize, i64)> = vec![(0, -(n as i64))];
    for i in 1..=n as usize {
        lambda_runs.extend([(i, 1), (0, 1), (i, -1)]);
    }
    let p = GroupPresentation::new(generators, Vec::new())?
        .with_marking(MARK_MERIDIAN, Word::generator(0))?
        .with_marking(MARK_LONGITUDE, Word::from_runs(lambda_runs))?;
    fill(&p, slope)
}

/// One derivation entry: the product of conjugates equals the product of
/// `conjugator * relator^sign * conjugator^-1` over these entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationStep {
    pub relator: usize,
    pub conjugator: Word,
    pub sign: i8,
}

/// Machine-checkable witness that a product of conjugates of `element` is
/// trivial: the claimed identity is re-verified by free reduction alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenTorsionCertificate {
    pub group: GroupPresentation,
    pub element: Word,
    pub conjugators: Vec<Word>,
    pub derivation: Vec<DerivationStep>,
}

impl GenTorsionCertificate {
    pub fn conjugate_product(&self) -> Word {
        let mut acc = Word::identity();
        for c in &self.conjugators {
            acc = acc.concat(&self.element.conjugated_by(c));
        }
        acc
    }

    pub fn derivation_product(&self) -> Result<Word> {
        let mut acc = Word::identity();
        for step in &self.derivation {
            let r = self
                .group
                .relators()
                .get(step.relator)
                .ok_or_else(|| Error::Parse(format!("relator index {} out of range", step.relator)))?;
            let signed = if step.sign >= 0 { r.clone() } else { r.inverse() };
            acc = acc.concat(&signed.conjugated_by(&step.conjugator));
        }
        Ok(acc)
    }
}

/// Closed-form certificate in U(n, p/q) for the meridian, valid whenever
/// p/q >= n (and p >= 2 so an order is defined): exactly p conjugates —
/// p - q*n identity conjugators, then mu^{k n} a_i for each block
/// k = q-1 .. 0 and i = 1..n. The conjugate product freely reduces to the
/// filling relator itself, so the derivation is the single entry
/// (relator 0, identity, +1).
pub fn derive_certificate(n: u64, slope: &Slope) -> Result<GenTorsionCertificate> {
    if !slope.q().is_positive() {
        return Err(Error::NegativeSlopeDenominator(slope.to_string()));
    }
    if *slope.p() < Int::from(2) {
        return Err(Error::OrderBelowTwo(slope.p().to_string()));
    }
    let threshold = Fraction::new(Int::from(n), Int::one());
    if !slope.at_least(&threshold) {
        return Err(Error::SlopeBelowThreshold {
            threshold: format!("{n}/1"),
            slope: slope.to_string(),
        });
    }
    let group = universal_presentation(n, slope)?;
    let p = u64::try_from(slope.p()).expect("desk-scale p");
    let q = u64::try_from(slope.q()).expect("desk-scale q");
    let mut conjugators = Vec::with_capacity(p as usize);
    for _ in 0..p - q * n {
        conjugators.push(Word::identity());
    }
    for k in (0..q).rev() {
        for i in 1..=n as usize {
            conjugators.push(Word::from_runs([(0, (k * n) as i64), (i, 1)]));
        }
    }
    debug_assert_eq!(conjugators.len() as u64, p);
    Ok(GenTorsionCertificate {
        group,
        element: Word::generator(0),
        conjugators,
        derivation: vec![DerivationStep {
            relator: 0,
            conjugator: Word::identity(),
            sign: 1,
        }],
    })
}

/// Checker verdict; failures carry a reason and, when the identity itself
/// fails, the reduced residual word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckVerdict {
    Pass,
    Fail {
        reason: String,
        residual: Option<Word>,
    },
}

impl CheckVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, CheckVerdict::Pass)
    }
}

impl fmt::Display for CheckVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckVerdict::Pass => write!(f, "pass"),
            CheckVerdict::Fail { reason, residual } => {
                write!(f, "fail: {reason}")?;
                if let Some(r) = residual {
                    write!(f, " (residual of {} letters)", r.letter_len())?;
                }
                Ok(())
            }
        }
    }
}

/// Verify by free reduction alone that the product of conjugates of the
/// element equals the derivation's product of conjugated relators. Sound for
/// any presentation: success proves the conjugate product is trivial in the
/// group.
pub fn check_certificate(c: &GenTorsionCertificate) -> CheckVerdict {
    let alphabet_len = c.group.generators().len();
    let over_alphabet = |w: &Word| w.max_generator().is_none_or(|g| g < alphabet_len);
    if !over_alphabet(&c.element)
        || !c.conjugators.iter().all(|w| over_alphabet(w))
        || !c.derivation.iter().all(|s| over_alphabet(&s.conjugator))
    {
        return CheckVerdict::Fail {
            reason: "word uses a generator outside the presentation alphabet".into(),
            residual: None,
        };
    }
    if c.conjugators.is_empty() {
        return CheckVerdict::Fail {
            reason: "empty conjugate product".into(),
            residual: None,
        };
    }
    if c.element.free_reduce().is_identity() {
        return CheckVerdict::Fail {
            reason: "element trivial".into(),
            residual: None,
        };
    }
    let rhs = match c.derivation_product() {
        Ok(w) => w.free_reduce(),
        Err(e) => {
            return CheckVerdict::Fail {
                reason: e.to_string(),
                residual: None,
            }
        }
    };
    let lhs = c.conjugate_product().free_reduce();
    if lhs == rhs {
        CheckVerdict::Pass
    } else {
        let residual = lhs.concat(&rhs.inverse()).free_reduce();
        CheckVerdict::Fail {
            reason: "conjugate product differs from derivation product".into(),
            residual: Some(residual),
        }
    }
}

/// Report on the generalized-torsion order of one element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenTorsionReport {
    pub element_nontrivial: bool,
    pub nontriviality_reason: String,
    /// Lower bound from the abelianization, when it certifies one (>= 2).
    pub order_lower: Option<Int>,
    pub order_lower_witness: Option<String>,
    /// The element has infinite order in H1: no product of conjugates can
    /// vanish at all.
    pub h1_order_infinite: bool,
    /// Upper bound = length of a checked certificate.
    pub order_upper: Option<Int>,
    pub certificate: Option<GenTorsionCertificate>,
    pub order_exact: Option<Int>,
    pub threshold_used: Option<Fraction>,
    pub notes: Vec<String>,
}

/// Combine the abelianization lower bound with a certificate upper bound.
/// Any vanishing product of k conjugates of g abelianizes to k * [g] = 0, so
/// the H1 order of g divides k; a checked certificate of length k shows the
/// minimum is at most k. Nontriviality is certified through H1 only.
pub fn order_bounds(
    p: &GroupPresentation,
    g: &Word,
    certificate: Option<&GenTorsionCertificate>,
) -> Result<GenTorsionReport> {
    let h = element_h1_order(p, g)?;
    let mut report = GenTorsionReport {
        element_nontrivial: false,
        nontriviality_reason: String::new(),
        order_lower: None,
        order_lower_witness: None,
        h1_order_infinite: false,
        order_upper: None,
        certificate: None,
        order_exact: None,
        threshold_used: None,
        notes: Vec::new(),
    };
    if h.is_zero() {
        report.element_nontrivial = true;
        report.nontriviality_reason = "image in H1 has infinite order".into();
        report.h1_order_infinite = true;
        report
            .notes
            .push("no generalized torsion detected: the element survives to infinite order in H1".into());
        return Ok(report);
    }
    if h.is_one() {
        report.nontriviality_reason =
            "image in H1 is trivial; the abelianization oracle certifies nothing".into();
    } else {
        report.element_nontrivial = true;
        report.nontriviality_reason = format!("image in H1 has order {h} >= 2");
        report.order_lower = Some(h.clone());
        report.order_lower_witness = Some(format!(
            "any vanishing product of k conjugates forces {h} | k"
        ));
    }
    if let Some(cert) = certificate {
        let applicable = cert.group == *p
            && cert.element.free_reduce() == g.free_reduce();
        if !applicable {
            report
                .notes
                .push("certificate ignored: it concerns a different group or element".into());
        } else {
            match check_certificate(cert) {
                CheckVerdict::Pass => {
                    report.order_upper = Some(Int::from(cert.conjugators.len() as i64));
                    report.certificate = Some(cert.clone());
                }
                CheckVerdict::Fail { reason, .. } => {
                    report.notes.push(format!("certificate rejected: {reason}"));
                }
            }
        }
    }
    if let (Some(lo), Some(up)) = (&report.order_lower, &report.order_upper) {
        if lo == up && report.element_nontrivial {
            report.order_exact = Some(lo.clone());
        }
    }
    Ok(report)
}

/// Bounded breadth-first search for a certificate: products of at most
/// `max_factors` conjugates with conjugators of length at most
/// `max_conjugator_length`, triviality tested by bounded relator-deletion
/// rewriting. `None` is not a proof of absence.
pub fn search_certificate(
    p: &GroupPresentation,
    g: &Word,
    max_factors: u64,
    max_conjugator_length: u64,
) -> Result<Option<GenTorsionCertificate>> {
    const NODE_BUDGET: usize = 200_000;

    let g = g.free_reduce();
    if g.is_identity() {
        return Ok(None);
    }
    let h = element_h1_order(p, &g)?;
    if h.is_zero() {
        // Infinite order in H1: no product of conjugates can vanish.
        return Ok(None);
    }
    let h = u64::try_from(&h).expect("finite order");
    let conjugators = enumerate_conjugators(p.generators().len(), max_conjugator_length);

    // BFS over partial products, deduplicated by the reduced word.
    let mut queue: VecDeque<(u64, Word, Vec<usize>)> = VecDeque::new();
    let mut seen: HashSet<(u64, Vec<(usize, i64)>)> = HashSet::new();
    queue.push_back((0, Word::identity(), Vec::new()));
    let mut expanded = 0usize;
    while let Some((k, product, chosen)) = queue.pop_front() {
        if k >= max_factors {
            continue;
        }
        expanded += 1;
        if expanded > NODE_BUDGET {
            return Ok(None);
        }
        for (ci, c) in conjugators.iter().enumerate() {
            let next = product.concat(&g.conjugated_by(c)).free_reduce();
            let nk = k + 1;
            let mut next_chosen = chosen.clone();
            next_chosen.push(ci);
            // Only products with k a multiple of the H1 order can vanish;
            // the order definition additionally wants k >= 2.
            if nk >= 2 && nk % h.max(1) == 0 {
                if let Some(derivation) = reduce_to_identity(&next, p, max_factors) {
                    let certificate = GenTorsionCertificate {
                        group: p.clone(),
                        element: g.clone(),
                        conjugators: next_chosen
                            .iter()
                            .map(|&i| conjugators[i].clone())
                            .collect(),
                        derivation,
                    };
                    debug_assert!(check_certificate(&certificate).passed());
                    return Ok(Some(certificate));
                }
            }
            if nk < max_factors && seen.insert((nk, next.runs().to_vec())) {
                queue.push_back((nk, next, next_chosen));
            }
        }
    }
    Ok(None)
}

/// All freely reduced words of length <= max over the alphabet, in
/// deterministic breadth-first order starting from the identity.
fn enumerate_conjugators(alphabet_len: usize, max_len: u64) -> Vec<Word> {
    let mut out = vec![Word::identity()];
    let mut frontier: Vec<Vec<(usize, i8)>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next_frontier = Vec::new();
        for w in &frontier {
            for g in 0..alphabet_len {
                for s in [1i8, -1] {
                    if let Some(&(lg, ls)) = w.last() {
                        if lg == g && ls == -s {
                            continue; // would cancel
                        }
                    }
                    let mut nw = w.clone();
                    nw.push((g, s));
                    next_frontier.push(nw);
                }
            }
        }
        for w in &next_frontier {
            out.push(Word::from_runs(w.iter().map(|&(g, s)| (g, s as i64))));
        }
        frontier = next_frontier;
    }
    out
}

/// Bounded rewriting: repeatedly delete a subword equal to a cyclic rotation
/// of some relator (or its inverse); success returns the derivation whose
/// conjugated-relator product freely equals the input word.
fn reduce_to_identity(
    w: &Word,
    p: &GroupPresentation,
    max_depth: u64,
) -> Option<Vec<DerivationStep>> {
    // Precompute every rotation of r^{+-1} with its standing conjugator:
    // rotation by j letters of r^s is alpha^-1 r^s alpha for the length-j
    // prefix alpha.
    struct Rotation {
        letters: Vec<(usize, i8)>,
        relator: usize,
        sign: i8,
        alpha_inv: Word,
    }
    let mut rotations = Vec::new();
    for (ri, r) in p.relators().iter().enumerate() {
        let r = r.free_reduce();
        for sign in [1i8, -1] {
            let base: Vec<(usize, i8)> = if sign > 0 {
                r.letters().collect()
            } else {
                r.inverse().letters().collect()
            };
            let n = base.len();
            for j in 0..n.max(1) {
                let mut rot = base[j.min(n)..].to_vec();
                rot.extend_from_slice(&base[..j.min(n)]);
                let alpha = Word::from_runs(base[..j.min(n)].iter().map(|&(g, s)| (g, s as i64)));
                rotations.push(Rotation {
                    letters: rot,
                    relator: ri,
                    sign,
                    alpha_inv: alpha.inverse(),
                });
            }
        }
    }

    fn letters_of(w: &Word) -> Vec<(usize, i8)> {
        w.letters().collect()
    }

    let mut steps = Vec::new();
    let mut current = w.free_reduce();
    for _ in 0..=max_depth {
        if current.is_identity() {
            return Some(steps);
        }
        let letters = letters_of(&current);
        let mut applied = false;
        'rot: for rot in &rotations {
            let m = rot.letters.len();
            if m == 0 || m > letters.len() {
                continue;
            }
            for pos in 0..=letters.len() - m {
                if letters[pos..pos + m] == rot.letters[..] {
                    let u = Word::from_runs(letters[..pos].iter().map(|&(g, s)| (g, s as i64)));
                    let v = Word::from_runs(
                        letters[pos + m..].iter().map(|&(g, s)| (g, s as i64)),
                    );
                    steps.push(DerivationStep {
                        relator: rot.relator,
                        conjugator: u.concat(&rot.alpha_inv).free_reduce(),
                        sign: rot.sign,
                    });
                    current = u.concat(&v).free_reduce();
                    applied = true;
                    break 'rot;
                }
            }
        }
        if !applied {
            return None;
        }
    }
    if current.is_identity() {
        Some(steps)
    } else {
        None
    }
}

/// Full pipeline report for the Montesinos family member K_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnReport {
    pub n: i64,
    pub descriptor: MontesinosDescriptor,
    pub disk: SingularDiskDatum,
    pub punctures: u64,
    pub slope: Slope,
    pub statement_threshold: Fraction,
    pub proof_threshold: Fraction,
    pub torsion: GenTorsionReport,
    pub criteria: CriteriaReport,
}

pub const DISK_PROVENANCE: &str =
    "coherent clasp disk for the Montesinos family with 2(n-1) + 6 positive punctures (assumed geometric input)";

/// Threshold note carried by every family report: the stated bound 2n-4
/// disagrees with the proven puncture count 2n+4; the proven bound is the
/// one enforced.
pub fn threshold_discrepancy_note(n: i64) -> String {
    format!(
        "threshold discrepancy: stated bound 2n-4 = {} vs proven puncture count 2n+4 = {}; the proven bound {} is enforced",
        2 * n - 4,
        2 * n + 4,
        2 * n + 4
    )
}

/// Assemble the K_n pipeline: puncture count 2n+4 (trusted geometric input),
/// certificate in U(2n+4, p/q), order bounds, and the gcd criteria report.
pub fn kn_report(n: i64, slope: &Slope) -> Result<KnReport> {
    if n < 2 {
        return Err(Error::FamilyIndexTooSmall(n));
    }
    if !slope.q().is_positive() {
        return Err(Error::NegativeSlopeDenominator(slope.to_string()));
    }
    let punctures = (2 * n + 4) as u64;
    let proof_threshold = crate::frac(2 * n + 4, 1);
    let statement_threshold = crate::frac(2 * n - 4, 1);
    if !slope.at_least(&proof_threshold) {
        return Err(Error::SlopeBelowThreshold {
            threshold: format!("{}/1", 2 * n + 4),
            slope: slope.to_string(),
        });
    }
    let descriptor = kn_descriptor(n)?;
    let disk = SingularDiskDatum {
        positive_punctures: punctures,
        negative_punctures: 0,
        provenance: DISK_PROVENANCE.to_string(),
    };
    let certificate = derive_certificate(punctures, slope)?;
    let group = certificate.group.clone();
    let mut torsion = order_bounds(&group, &Word::generator(0), Some(&certificate))?;
    torsion.threshold_used = Some(proof_threshold.clone());
    torsion.notes.push(threshold_discrepancy_note(n));
    let criteria = lm_criteria(&descriptor, slope.to_fraction().as_ref());
    Ok(KnReport {
        n,
        descriptor,
        disk,
        punctures,
        slope: slope.clone(),
        statement_threshold,
        proof_threshold,
        torsion,
        criteria,
    })
}

// --- certificate JSON schema ------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DerivationStepJson {
    pub relator: usize,
    pub conjugator: String,
    pub sign: i8,
}

/// Wire format: words as presentation-relative text, so third parties can
/// re-check with only free reduction.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateJson {
    pub group: String,
    pub element: String,
    pub conjugators: Vec<String>,
    pub derivation: Vec<DerivationStepJson>,
}

impl GenTorsionCertificate {
    pub fn to_json(&self) -> CertificateJson {
        let alphabet = self.group.generators();
        CertificateJson {
            group: self.group.to_string(),
            element: self.element.display(alphabet),
            conjugators: self
                .conjugators
                .iter()
                .map(|c| c.display(alphabet))
                .collect(),
            derivation: self
                .derivation
                .iter()
                .map(|s| DerivationStepJson {
                    relator: s.relator,
                    conjugator: s.conjugator.display(alphabet),
                    sign: s.sign,
                })
                .collect(),
        }
    }

    pub fn from_json(json: &CertificateJson) -> Result<Self> {
        let group: GroupPresentation = json.group.parse()?;
        let alphabet = group.generators().to_vec();
        let element = Word::parse(&json.element, &alphabet)?;
        let conjugators = json
            .conjugators
            .iter()
            .map(|c| Word::parse(c, &alphabet))
            .collect::<Result<Vec<_>>>()?;
        let derivation = json
            .derivation
            .iter()
            .map(|s| {
                Ok(DerivationStep {
                    relator: s.relator,
                    conjugator: Word::parse(&s.conjugator, &alphabet)?,
                    sign: if s.sign >= 0 { 1 } else { -1 },
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            group,
            element,
            conjugators,
            derivation,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::AbelianInvariants;

    fn slope(p: i64, q: i64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    #[test]
    fn canonicalize_cases() {
        let pos = SingularDiskDatum {
            positive_punctures: 6,
            negative_punctures: 0,
            provenance: "test".into(),
        };
        let (d, s, mirrored) = canonicalize(&pos, &slope(13, 2)).unwrap();
        assert_eq!((d.positive_punctures, d.negative_punctures), (6, 0));
        assert_eq!(s, slope(13, 2));
        assert!(!mirrored);

        let neg = SingularDiskDatum {
            positive_punctures: 0,
            negative_punctures: 6,
            provenance: "test".into(),
        };
        let (d, s, mirrored) = canonicalize(&neg, &slope(-13, 2)).unwrap();
        assert_eq!((d.positive_punctures, d.negative_punctures), (6, 0));
        assert_eq!(s, slope(13, 2));
        assert!(mirrored);
        // idempotent after one application
        let (d2, s2, m2) = canonicalize(&d, &s).unwrap();
        assert_eq!((d2, s2, m2), (d, s, false));

        let mixed = SingularDiskDatum {
            positive_punctures: 3,
            negative_punctures: 2,
            provenance: "test".into(),
        };
        assert!(matches!(
            canonicalize(&mixed, &slope(5, 1)),
            Err(Error::NonCoherentDisk { pos: 3, neg: 2 })
        ));
    }

    #[test]
    fn universal_presentation_small() {
        let u = universal_presentation(0, &slope(5, 1)).unwrap();
        assert_eq!(u.generators(), &["m".to_string()]);
        assert_eq!(u.relators().len(), 1);
        assert_eq!(u.relators()[0].free_reduce(), Word::from_runs([(0, 5)]));

        let u = universal_presentation(1, &slope(3, 1)).unwrap();
        assert_eq!(u.generators().len(), 2);
        let r = u.relators()[0].free_reduce();
        // mu^3 mu^-1 a1 mu a1^-1 reduces to mu^2 a1 mu a1^-1
        assert_eq!(r, Word::from_runs([(0, 2), (1, 1), (0, 1), (1, -1)]));
    }

    #[test]
    fn universal_h1_is_zp_plus_free() {
        for (n, p, q) in [(0u64, 5i64, 1i64), (1, 3, 2), (6, 13, 2), (8, 16, 1)] {
            let u = universal_presentation(n, &slope(p, q)).unwrap();
            let mut expected = vec![crate::int(p)];
            expected.extend(std::iter::repeat_n(crate::int(0), n as usize));
            assert_eq!(h1(&u), AbelianInvariants { factors: expected });
            assert_eq!(
                element_h1_order(&u, &Word::generator(0)).unwrap(),
                crate::int(p)
            );
        }
    }

    #[test]
    fn derived_certificate_shape() {
        // n=1, p=3, q=2: conjugators [1, mu a1, a1]
        let c = derive_certificate(1, &slope(3, 2)).unwrap();
        assert_eq!(c.conjugators.len(), 3);
        assert_eq!(c.conjugators[0], Word::identity());
        assert_eq!(c.conjugators[1], Word::from_runs([(0, 1), (1, 1)]));
        assert_eq!(c.conjugators[2], Word::from_runs([(1, 1)]));
        assert!(check_certificate(&c).passed());
    }

    #[test]
    fn derived_certificates_check_on_a_grid() {
        for n in 0..=6u64 {
            for q in 1..=3i64 {
                for p in 2..=(q * n as i64 + 12) {
                    if num_integer::gcd(p, q) != 1 || p < q * n as i64 || p < 2 {
                        continue;
                    }
                    let c = derive_certificate(n, &slope(p, q)).unwrap();
                    assert_eq!(c.conjugators.len() as i64, p, "(n,p,q)=({n},{p},{q})");
                    assert!(
                        check_certificate(&c).passed(),
                        "(n,p,q)=({n},{p},{q})"
                    );
                }
            }
        }
    }

    #[test]
    fn threshold_and_order_guards() {
        assert!(matches!(
            derive_certificate(6, &slope(11, 2)),
            Err(Error::SlopeBelowThreshold { .. })
        ));
        assert!(matches!(
            derive_certificate(0, &slope(1, 1)),
            Err(Error::OrderBelowTwo(_))
        ));
        assert!(matches!(
            derive_certificate(2, &slope(13, -2)),
            Err(Error::NegativeSlopeDenominator(_))
        ));
    }

    #[test]
    fn boundary_slope_accepted() {
        let c = derive_certificate(8, &slope(8, 1)).unwrap();
        assert_eq!(c.conjugators.len(), 8);
        assert!(check_certificate(&c).passed());
        // just below
        assert!(derive_certificate(8, &slope(7, 1)).is_err());
    }

    #[test]
    fn checker_rejects_tampering() {
        let c = derive_certificate(6, &slope(13, 2)).unwrap();
        assert!(check_certificate(&c).passed());

        let mut dropped = c.clone();
        dropped.conjugators.pop();
        let v = check_certificate(&dropped);
        assert!(!v.passed());
        if let CheckVerdict::Fail { residual, .. } = v {
            assert!(!residual.unwrap().is_identity());
        }

        let mut trivial = c.clone();
        trivial.element = Word::identity();
        assert!(matches!(
            check_certificate(&trivial),
            CheckVerdict::Fail { reason, .. } if reason.contains("element trivial")
        ));

        let mut empty = c;
        empty.conjugators.clear();
        assert!(!check_certificate(&empty).passed());
    }

    #[test]
    fn order_bounds_cases() {
        // torsion case: U(0, 5/1) = <m | m^5>
        let c = derive_certificate(0, &slope(5, 1)).unwrap();
        let u = c.group.clone();
        let r = order_bounds(&u, &Word::generator(0), Some(&c)).unwrap();
        assert_eq!(r.order_exact, Some(crate::int(5)));
        assert!(r.element_nontrivial);

        // the 13/2 example on the 6-punctured disk
        let c = derive_certificate(6, &slope(13, 2)).unwrap();
        let u = c.group.clone();
        let r = order_bounds(&u, &Word::generator(0), Some(&c)).unwrap();
        assert_eq!(r.order_exact, Some(crate::int(13)));

        // free group: no generalized torsion
        let free = GroupPresentation::new(vec!["x".into()], vec![]).unwrap();
        let r = order_bounds(&free, &Word::generator(0), None).unwrap();
        assert!(r.element_nontrivial);
        assert!(r.h1_order_infinite);
        assert!(r.order_upper.is_none());
        assert!(r.notes.iter().any(|n| n.contains("no generalized torsion")));
    }

    #[test]
    fn search_finds_small_certificates() {
        // <x | x^3>: three identity conjugators
        let p = GroupPresentation::new(
            vec!["x".into()],
            vec![Word::from_runs([(0, 3)])],
        )
        .unwrap();
        let c = search_certificate(&p, &Word::generator(0), 3, 0)
            .unwrap()
            .expect("certificate exists");
        assert_eq!(c.conjugators.len(), 3);
        assert!(c.conjugators.iter().all(Word::is_identity));
        assert!(check_certificate(&c).passed());

        // free group: none, quickly
        let free = GroupPresentation::new(vec!["x".into()], vec![]).unwrap();
        assert!(search_certificate(&free, &Word::generator(0), 8, 4)
            .unwrap()
            .is_none());

        // U(1, 3/2): some certificate of length 3 within the bounds
        let u = universal_presentation(1, &slope(3, 2)).unwrap();
        let c = search_certificate(&u, &Word::generator(0), 3, 3)
            .unwrap()
            .expect("derived certificate guarantees existence");
        assert_eq!(c.conjugators.len(), 3);
        assert!(check_certificate(&c).passed());
    }

    #[test]
    fn kn_report_pipeline() {
        let r = kn_report(2, &slope(16, 1)).unwrap();
        assert_eq!(r.punctures, 8);
        assert_eq!(r.torsion.order_exact, Some(crate::int(16)));
        assert_eq!(r.torsion.certificate.as_ref().unwrap().conjugators.len(), 16);
        assert!(r.criteria.is_consistent());
        assert!(r
            .torsion
            .notes
            .iter()
            .any(|n| n.contains("threshold discrepancy")));

        let r = kn_report(4, &slope(30, 1)).unwrap();
        assert_eq!(r.punctures, 12);
        assert_eq!(r.torsion.order_exact, Some(crate::int(30)));
        assert!(r.criteria.conclusions.iter().all(|c| c.holds));

        assert!(matches!(
            kn_report(3, &slope(9, 1)),
            Err(Error::SlopeBelowThreshold { .. })
        ));
    }

    #[test]
    fn certificate_json_round_trip() {
        let c = derive_certificate(6, &slope(13, 2)).unwrap();
        let json = c.to_json();
        let text = serde_json::to_string_pretty(&json).unwrap();
        let parsed: CertificateJson = serde_json::from_str(&text).unwrap();
        let back = GenTorsionCertificate::from_json(&parsed).unwrap();
        assert_eq!(back, c);
        assert!(check_certificate(&back).passed());
    }
}
