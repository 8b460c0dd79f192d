//! Oriented planar diagrams (PD codes) synthesized from tangle words and
//! Montesinos descriptors.
//!
//! Construction goes through a private rational-tangle builder: a tangle is a
//! 4-ended wiring of crossings, combined by the fraction calculus
//! `F(T + [m]) = F(T) + m`, `F(rot T) = -1/F(T)`, `F(mirror T) = -F(T)`.
//! Closing the assembled tangle and traversing the resulting curve fixes the
//! orientation, arc labels, and crossing signs deterministically from a
//! basepoint on the first block's NW strand.

use crate::error::{Error, Result};
use crate::tangles::{cf_eval, cf_expand, MontesinosDescriptor, TangleWord};
use num_integer::Integer;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// One PD crossing: four arc labels in counterclockwise order starting at the
/// incoming under-strand, plus the crossing sign. Positions 1 and 3 both
/// carry the over-arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub arcs: [usize; 4],
    pub sign: i8,
}

impl Crossing {
    pub fn under_in(&self) -> usize {
        self.arcs[0]
    }

    pub fn over(&self) -> usize {
        self.arcs[1]
    }

    pub fn under_out(&self) -> usize {
        self.arcs[2]
    }
}

/// Oriented planar diagram. For knots with at least one crossing, the number
/// of arcs equals the number of crossings; the round unknot diagram is the
/// special case of no crossings and a single arc.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    arc_count: usize,
    component_count: usize,
}

impl PlanarDiagram {
    /// Assemble a diagram from raw parts without validation; run
    /// [`validate`] to check it.
    pub fn from_parts(crossings: Vec<Crossing>, arc_count: usize, component_count: usize) -> Self {
        Self {
            crossings,
            arc_count,
            component_count,
        }
    }

    /// The 0-crossing round unknot diagram.
    pub fn unknot() -> Self {
        Self {
            crossings: Vec::new(),
            arc_count: 1,
            component_count: 1,
        }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    /// Arc that follows `arc` when the traversal passes under a crossing,
    /// i.e. the under-out arc of the crossing whose under-in is `arc`.
    pub fn arc_successor(&self, arc: usize) -> Option<usize> {
        self.crossings
            .iter()
            .find(|c| c.under_in() == arc)
            .map(|c| c.under_out())
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.crossings.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(
                f,
                "X[{},{},{},{}]/sign={}",
                c.arcs[0],
                c.arcs[1],
                c.arcs[2],
                c.arcs[3],
                if c.sign >= 0 { "+1" } else { "-1" }
            )?;
        }
        Ok(())
    }
}

impl FromStr for PlanarDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::unknot());
        }
        let mut crossings = Vec::new();
        for tok in s.split(", ") {
            let tok = tok.trim();
            let (body, sign) = tok
                .split_once("/sign=")
                .ok_or_else(|| Error::Parse(format!("missing sign annotation in `{tok}`")))?;
            let sign = match sign.trim() {
                "+1" => 1,
                "-1" => -1,
                other => return Err(Error::Parse(format!("bad sign `{other}`"))),
            };
            let inner = body
                .trim()
                .strip_prefix("X[")
                .and_then(|b| b.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("bad crossing `{tok}`")))?;
            let arcs: Vec<usize> = inner
                .split(',')
                .map(|a| {
                    a.trim()
                        .parse()
                        .map_err(|e| Error::Parse(format!("bad arc `{a}`: {e}")))
                })
                .collect::<Result<_>>()?;
            let arcs: [usize; 4] = arcs
                .try_into()
                .map_err(|_| Error::Parse(format!("crossing needs 4 arcs: `{tok}`")))?;
            crossings.push(Crossing { arcs, sign });
        }
        let arc_count = crossings.len();
        let d = Self::from_parts(crossings, arc_count, 1);
        Ok(d)
    }
}

/// Sum of crossing signs.
pub fn writhe(d: &PlanarDiagram) -> i64 {
    d.crossings.iter().map(|c| c.sign as i64).sum()
}

/// Validation verdict; never aborts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub first_violation: Option<String>,
}

impl ValidationReport {
    fn pass() -> Self {
        Self {
            ok: true,
            first_violation: None,
        }
    }

    fn fail(msg: impl Into<String>) -> Self {
        Self {
            ok: false,
            first_violation: Some(msg.into()),
        }
    }
}

/// Check arc pairing (each arc terminates exactly one under-strand and starts
/// exactly one), over-slot consistency, signs, and — for single-component
/// diagrams — that the arcs form one closed cycle.
pub fn validate(d: &PlanarDiagram) -> ValidationReport {
    if d.crossings.is_empty() {
        if d.arc_count != 1 || d.component_count != 1 {
            return ValidationReport::fail("crossingless diagram must be the round unknot");
        }
        return ValidationReport::pass();
    }
    if d.arc_count != d.crossings.len() {
        return ValidationReport::fail(format!(
            "arc count {} != crossing count {}",
            d.arc_count,
            d.crossings.len()
        ));
    }
    for c in &d.crossings {
        if c.sign != 1 && c.sign != -1 {
            return ValidationReport::fail(format!("bad sign {}", c.sign));
        }
        if c.arcs[1] != c.arcs[3] {
            return ValidationReport::fail(format!(
                "over-strand slots disagree: {} vs {}",
                c.arcs[1], c.arcs[3]
            ));
        }
        for &a in &c.arcs {
            if a >= d.arc_count {
                return ValidationReport::fail(format!("arc {a} out of range"));
            }
        }
    }
    // Under-slot pairing: each arc once as under-in, once as under-out.
    let mut in_count = vec![0usize; d.arc_count];
    let mut out_count = vec![0usize; d.arc_count];
    for c in &d.crossings {
        in_count[c.under_in()] += 1;
        out_count[c.under_out()] += 1;
    }
    for a in 0..d.arc_count {
        match in_count[a] + out_count[a] {
            0 | 1 => return ValidationReport::fail(format!("unpaired arc {a}")),
            2 if in_count[a] == 1 && out_count[a] == 1 => {}
            2 => return ValidationReport::fail(format!("arc {a} paired inconsistently")),
            _ => return ValidationReport::fail(format!("over-paired arc {a}")),
        }
    }
    if d.component_count == 1 {
        // Arcs must form a single closed cycle under the successor map.
        let mut seen = 1usize;
        let mut cur = d.arc_successor(0).expect("paired above");
        while cur != 0 {
            seen += 1;
            if seen > d.arc_count {
                return ValidationReport::fail("arc successor map is not a single cycle");
            }
            cur = d.arc_successor(cur).expect("paired above");
        }
        if seen != d.arc_count {
            return ValidationReport::fail("arc successor map splits into several cycles");
        }
    }
    ValidationReport::pass()
}

// ---------------------------------------------------------------------------
// Tangle builder
// ---------------------------------------------------------------------------

/// Corner indices of an open tangle: NW, NE, SW, SE.
const NW: usize = 0;
const NE: usize = 1;
const SW: usize = 2;
const SE: usize = 3;

/// Endpoint of a wire: a crossing port (ports 0..4 counterclockwise, strands
/// run through opposite ports) or an open boundary marker.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Node {
    Port { x: usize, p: u8 },
    Boundary(usize),
}

/// Open 4-ended tangle under construction. `over02` per crossing says whether
/// the strand through ports (0, 2) is the over-strand.
#[derive(Debug, Clone)]
struct Tangle {
    over02: Vec<bool>,
    edges: Vec<(Node, Node)>,
    /// Boundary marker ids of the four corners, in NW, NE, SW, SE order.
    corners: [usize; 4],
    next_marker: usize,
}

impl Tangle {
    /// Horizontal twist row of |m| crossings between two horizontal strands;
    /// m = 0 is the 0-tangle (two parallel wires). Crossing ports: 0 = lower
    /// left, 1 = lower right, 2 = upper right, 3 = upper left.
    fn integer(m: i64) -> Self {
        let count = m.unsigned_abs() as usize;
        let corners = [0, 1, 2, 3];
        let mut t = Tangle {
            over02: vec![m > 0; count],
            edges: Vec::new(),
            corners,
            next_marker: 4,
        };
        if count == 0 {
            t.edges.push((Node::Boundary(NW), Node::Boundary(NE)));
            t.edges.push((Node::Boundary(SW), Node::Boundary(SE)));
            return t;
        }
        t.edges.push((Node::Boundary(NW), Node::Port { x: 0, p: 3 }));
        t.edges.push((Node::Boundary(SW), Node::Port { x: 0, p: 0 }));
        for x in 0..count - 1 {
            t.edges.push((
                Node::Port { x, p: 2 },
                Node::Port { x: x + 1, p: 3 },
            ));
            t.edges.push((
                Node::Port { x, p: 1 },
                Node::Port { x: x + 1, p: 0 },
            ));
        }
        t.edges
            .push((Node::Port { x: count - 1, p: 2 }, Node::Boundary(NE)));
        t.edges
            .push((Node::Port { x: count - 1, p: 1 }, Node::Boundary(SE)));
        t
    }

    /// Rotate 90 degrees counterclockwise: ports advance by one, corners
    /// permute, and the over-strand flag flips (the (0,2) strand moves onto
    /// ports (1,3)).
    fn rot_ccw(mut self) -> Self {
        for flag in &mut self.over02 {
            *flag = !*flag;
        }
        for (a, b) in &mut self.edges {
            for n in [a, b] {
                if let Node::Port { p, .. } = n {
                    *p = (*p + 1) % 4;
                }
            }
        }
        // new NW = old NE, new NE = old SE, new SE = old SW, new SW = old NW
        self.corners = [
            self.corners[NE],
            self.corners[SE],
            self.corners[NW],
            self.corners[SW],
        ];
        self
    }

    /// Switch every crossing (the vertical mirror): F -> -F.
    fn mirror(mut self) -> Self {
        for flag in &mut self.over02 {
            *flag = !*flag;
        }
        self
    }

    /// Fuse two boundary markers, deleting both and joining the wires they
    /// terminated. Returns the number of closed loops created (1 exactly when
    /// the two markers were the two ends of a single edge).
    fn fuse(&mut self, a: usize, b: usize) -> usize {
        let pos_a = self
            .edges
            .iter()
            .position(|(x, y)| *x == Node::Boundary(a) || *y == Node::Boundary(a))
            .expect("marker present");
        let (xa, ya) = self.edges[pos_a];
        let other_a = if xa == Node::Boundary(a) { ya } else { xa };
        if other_a == Node::Boundary(b) {
            self.edges.remove(pos_a);
            return 1;
        }
        let pos_b = self
            .edges
            .iter()
            .position(|(x, y)| *x == Node::Boundary(b) || *y == Node::Boundary(b))
            .expect("marker present");
        let (xb, yb) = self.edges[pos_b];
        let other_b = if xb == Node::Boundary(b) { yb } else { xb };
        let (hi, lo) = if pos_a > pos_b {
            (pos_a, pos_b)
        } else {
            (pos_b, pos_a)
        };
        self.edges.remove(hi);
        self.edges.remove(lo);
        self.edges.push((other_a, other_b));
        0
    }

    /// Horizontal concatenation: self on the left, rhs on the right, joining
    /// NE–NW and SE–SW. Fraction calculus: F(self + rhs) = F(self) + F(rhs)
    /// when either side is rational.
    fn concat(mut self, rhs: Tangle) -> Self {
        let offset_x = self.over02.len();
        let offset_m = self.next_marker;
        self.over02.extend(rhs.over02);
        for (a, b) in rhs.edges {
            let shift = |n: Node| match n {
                Node::Port { x, p } => Node::Port { x: x + offset_x, p },
                Node::Boundary(m) => Node::Boundary(m + offset_m),
            };
            self.edges.push((shift(a), shift(b)));
        }
        let rhs_corners = rhs.corners.map(|m| m + offset_m);
        self.next_marker += rhs.next_marker;
        let loops = self.fuse(self.corners[NE], rhs_corners[NW])
            + self.fuse(self.corners[SE], rhs_corners[SW]);
        // A legal tangle concatenation cannot close a loop.
        debug_assert_eq!(loops, 0);
        self.corners = [
            self.corners[NW],
            rhs_corners[NE],
            self.corners[SW],
            rhs_corners[SE],
        ];
        self
    }

    /// Numerator closure: join NW–NE across the top and SW–SE across the
    /// bottom, leaving a closed diagram.
    fn close_numerator(mut self) -> ClosedDiagram {
        // Remember where the NW corner attached: the traversal basepoint.
        let basepoint = self
            .edges
            .iter()
            .find_map(|&(x, y)| {
                if x == Node::Boundary(self.corners[NW]) {
                    Some(y)
                } else if y == Node::Boundary(self.corners[NW]) {
                    Some(x)
                } else {
                    None
                }
            })
            .expect("NW corner present");
        let mut free_loops = 0;
        free_loops += self.fuse(self.corners[NW], self.corners[NE]);
        free_loops += self.fuse(self.corners[SW], self.corners[SE]);
        let basepoint = match basepoint {
            Node::Port { x, p } => Some((x, p)),
            Node::Boundary(_) => None, // fully crossingless closure
        };
        ClosedDiagram {
            over02: self.over02,
            edges: self.edges,
            free_loops,
            basepoint,
        }
    }
}

/// Closed 4-valent diagram before arc labeling.
struct ClosedDiagram {
    over02: Vec<bool>,
    edges: Vec<(Node, Node)>,
    free_loops: usize,
    basepoint: Option<(usize, u8)>,
}

impl ClosedDiagram {
    /// mate[(x, p)] = the port wired to (x, p).
    fn mates(&self) -> Vec<[(usize, u8); 4]> {
        let mut mates = vec![[(usize::MAX, 0u8); 4]; self.over02.len()];
        for &(a, b) in &self.edges {
            match (a, b) {
                (Node::Port { x: xa, p: pa }, Node::Port { x: xb, p: pb }) => {
                    mates[xa][pa as usize] = (xb, pb);
                    mates[xb][pb as usize] = (xa, pa);
                }
                _ => unreachable!("closed diagram has no boundary markers"),
            }
        }
        mates
    }

    fn component_count(&self) -> usize {
        let n = self.over02.len();
        if n == 0 {
            return self.free_loops;
        }
        let mates = self.mates();
        let mut entered = vec![[false; 4]; n];
        let mut cycles = 0;
        for x in 0..n {
            for p in 0..4u8 {
                if entered[x][p as usize] {
                    continue;
                }
                cycles += 1;
                let (mut cx, mut cp) = (x, p);
                loop {
                    if entered[cx][cp as usize] {
                        break;
                    }
                    entered[cx][cp as usize] = true;
                    let out = (cp + 2) % 4;
                    let (nx, np) = mates[cx][out as usize];
                    (cx, cp) = (nx, np);
                }
            }
        }
        // Each strand cycle is entered twice per crossing visit but counted
        // once per starting port orbit; orbits are directed, so each closed
        // curve contributes exactly two directed cycles.
        debug_assert_eq!(cycles % 2, 0);
        cycles / 2 + self.free_loops
    }

    /// Orient from the basepoint, label the arcs in traversal order, and emit
    /// the PD crossing list. Requires a single-component closed curve.
    fn into_diagram(self) -> Result<PlanarDiagram> {
        let n = self.over02.len();
        if n == 0 {
            return if self.free_loops == 1 {
                Ok(PlanarDiagram::unknot())
            } else {
                Err(Error::MultiComponent {
                    components: self.free_loops,
                })
            };
        }
        let components = self.component_count();
        if components != 1 {
            return Err(Error::MultiComponent { components });
        }

        let mates = self.mates();
        let (bx, bp) = self.basepoint.expect("crossings exist");

        // Walk the knot: entering crossing cx at port cp, leave at cp+2.
        // Record the entry events; each crossing is entered exactly twice.
        let mut events: Vec<(usize, u8)> = Vec::with_capacity(2 * n);
        let (mut cx, mut cp) = (bx, bp);
        loop {
            events.push((cx, cp));
            let out = (cp + 2) % 4;
            (cx, cp) = mates[cx][out as usize];
            if (cx, cp) == (bx, bp) {
                break;
            }
        }
        debug_assert_eq!(events.len(), 2 * n);

        let is_under = |x: usize, p: u8| {
            let on_02 = p % 2 == 0;
            on_02 != self.over02[x]
        };

        // Arc labels advance after each under-entry; the arc containing the
        // basepoint is arc 0, and the final under-exit wraps back onto it.
        let mut under_seen = 0usize;
        let mut current_arc = 0usize;
        let mut under_in = vec![usize::MAX; n];
        let mut under_out = vec![usize::MAX; n];
        let mut under_in_port = vec![0u8; n];
        let mut over_arc = vec![usize::MAX; n];
        let mut over_in_port = vec![0u8; n];
        for &(x, p) in &events {
            if is_under(x, p) {
                under_in[x] = current_arc;
                under_in_port[x] = p;
                under_seen += 1;
                current_arc = under_seen % n;
                under_out[x] = current_arc;
            } else {
                over_arc[x] = current_arc;
                over_in_port[x] = p;
            }
        }
        debug_assert_eq!(under_seen, n);

        let crossings = (0..n)
            .map(|x| {
                // Positive exactly when the over-strand enters at the port 90
                // degrees clockwise from the under-in port.
                let sign = if (4 + over_in_port[x] - under_in_port[x]) % 4 == 3 {
                    1
                } else {
                    -1
                };
                Crossing {
                    arcs: [under_in[x], over_arc[x], under_out[x], over_arc[x]],
                    sign,
                }
            })
            .collect();
        Ok(PlanarDiagram::from_parts(crossings, n, 1))
    }
}

/// Realize `Default`-convention entries as a rational tangle:
/// T(a :: rest) = [a] + rot(mirror(T(rest))), so F = a + 1/F(rest).
fn tangle_of_entries(entries: &[i64]) -> Tangle {
    let (first, rest) = entries.split_first().expect("non-empty expansion");
    if rest.is_empty() {
        return Tangle::integer(*first);
    }
    Tangle::integer(*first).concat(tangle_of_entries(rest).mirror().rot_ccw())
}

/// Standard 4-plat closure of a tangle word: `sum(|a_i|)` crossings, single
/// component. Requires the knot case (odd continued-fraction numerator of
/// absolute value >= 3).
pub fn two_bridge_diagram(w: &TangleWord) -> Result<PlanarDiagram> {
    let f = cf_eval(w)?;
    let p = f.numer().abs();
    if p.is_even() || p < crate::int(3) {
        return Err(Error::NotTwoBridgeKnot(format!(
            "{}/{} from {}",
            f.numer(),
            f.denom(),
            w
        )));
    }
    let t = tangle_of_entries(w.entries());
    t.close_numerator().into_diagram()
}

/// Horizontal concatenation of one rational-tangle block per fraction (each
/// realized from its `Default`-convention expansion), closed by the standard
/// Montesinos closure. Errors when the closure is not a single component.
pub fn montesinos_diagram(d: &MontesinosDescriptor) -> Result<PlanarDiagram> {
    let mut blocks = d.fractions().iter().map(|f| {
        let entries = cf_expand(f);
        tangle_of_entries(&entries)
    });
    let first = blocks.next().expect("descriptor non-empty");
    let tangle = blocks.fold(first, Tangle::concat);
    tangle.close_numerator().into_diagram()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tangles::kn_descriptor;

    fn word(entries: &[i64]) -> TangleWord {
        TangleWord::with_default(entries).unwrap()
    }

    #[test]
    fn trefoil_plat() {
        let d = two_bridge_diagram(&word(&[3])).unwrap();
        assert_eq!(d.crossings().len(), 3);
        assert_eq!(d.arc_count(), 3);
        assert_eq!(d.component_count(), 1);
        assert!(validate(&d).ok, "{:?}", validate(&d));
        assert_eq!(writhe(&d).abs(), 3);
    }

    #[test]
    fn figure_eight_plat() {
        let d = two_bridge_diagram(&word(&[2, 2])).unwrap();
        assert_eq!(d.crossings().len(), 4);
        assert!(validate(&d).ok);
        // the standard 5/2 plat is amphichiral: two crossings of each sign
        assert_eq!(writhe(&d), 0);
    }

    #[test]
    fn large_two_bridge_word() {
        let d = two_bridge_diagram(&word(&[2, -2, 6, -7, 1])).unwrap();
        assert_eq!(d.crossings().len(), 18);
        assert_eq!(d.component_count(), 1);
        assert!(validate(&d).ok);
    }

    #[test]
    fn link_words_rejected() {
        // [2] evaluates to 2/1: a link, not a knot
        assert!(matches!(
            two_bridge_diagram(&word(&[2])),
            Err(Error::NotTwoBridgeKnot(_))
        ));
        // [1] is the unknot fraction 1/1
        assert!(two_bridge_diagram(&word(&[1])).is_err());
    }

    #[test]
    fn family_diagrams_are_knots() {
        for n in 2..=5 {
            let d = montesinos_diagram(&kn_descriptor(n).unwrap()).unwrap();
            assert_eq!(d.component_count(), 1, "K_{n}");
            assert!(validate(&d).ok, "K_{n}: {:?}", validate(&d));
            assert_eq!(d.arc_count(), d.crossings().len());
        }
        // K_2 = M(5/3, 17/6): expansions [1,1,2] and [2,1,5] give 12 crossings
        let d = montesinos_diagram(&kn_descriptor(2).unwrap()).unwrap();
        assert_eq!(d.crossings().len(), 12);
        assert!(d.crossings().len() <= 20);
    }

    #[test]
    fn single_fraction_block() {
        let m = MontesinosDescriptor::new(vec![crate::frac(1, 3)]).unwrap();
        let d = montesinos_diagram(&m).unwrap();
        assert_eq!(d.crossings().len(), 3);
        assert!(validate(&d).ok);
    }

    #[test]
    fn two_component_closure_rejected() {
        let m = MontesinosDescriptor::new(vec![crate::frac(1, 2), crate::frac(1, 2)]).unwrap();
        assert_eq!(
            montesinos_diagram(&m),
            Err(Error::MultiComponent { components: 2 })
        );
    }

    #[test]
    fn unknot_diagram() {
        let d = PlanarDiagram::unknot();
        assert_eq!(writhe(&d), 0);
        assert!(validate(&d).ok);
    }

    #[test]
    fn kink_changes_writhe_by_one() {
        // Append a curl on the NE strand before closing: same knot, one more
        // signed crossing.
        let base = word(&[3]);
        let plain = two_bridge_diagram(&base).unwrap();
        for kink_sign in [1i64, -1] {
            let mut t = tangle_of_entries(base.entries());
            // A one-crossing tangle with ports 1,2 joined is a kinked strand.
            let x = t.over02.len();
            t.over02.push(kink_sign > 0);
            let m0 = t.next_marker;
            t.next_marker += 4;
            t.edges.push((Node::Boundary(m0), Node::Port { x, p: 3 }));
            t.edges.push((Node::Boundary(m0 + 1), Node::Port { x, p: 0 }));
            t.edges.push((Node::Port { x, p: 1 }, Node::Port { x, p: 2 }));
            let loops = t.fuse(t.corners[NE], m0);
            assert_eq!(loops, 0);
            t.corners[NE] = m0 + 1;
            let kinked = t.close_numerator().into_diagram().unwrap();
            assert!(validate(&kinked).ok);
            assert_eq!(
                (writhe(&kinked) - writhe(&plain)).abs(),
                1,
                "kink must change writhe by one"
            );
        }
    }

    #[test]
    fn validate_catches_bad_pairings() {
        // arc 1 appears once in under slots
        let d = PlanarDiagram::from_parts(
            vec![
                Crossing {
                    arcs: [0, 1, 1, 1],
                    sign: 1,
                },
                Crossing {
                    arcs: [0, 1, 0, 1],
                    sign: 1,
                },
            ],
            2,
            1,
        );
        let r = validate(&d);
        assert!(!r.ok);
        assert!(r.first_violation.unwrap().contains("over-paired arc 0"));

        let d = PlanarDiagram::from_parts(
            vec![Crossing {
                arcs: [0, 0, 0, 1],
                sign: 1,
            }],
            1,
            1,
        );
        let r = validate(&d);
        assert!(!r.ok);
    }

    #[test]
    fn generated_diagrams_validate_and_roundtrip() {
        for entries in [&[3i64][..], &[2, 2], &[3, 1, 1], &[2, -2, 2, 3]] {
            let w = word(entries);
            if let Ok(d) = two_bridge_diagram(&w) {
                assert!(validate(&d).ok, "{entries:?}");
                let text = d.to_string();
                let back: PlanarDiagram = text.parse().unwrap();
                assert_eq!(back, d, "{entries:?}");
            }
        }
    }
}
