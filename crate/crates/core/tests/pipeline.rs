//! Cross-module consistency: diagrams feed Wirtinger presentations feed Fox
//! calculus, and two independent computations of the knot determinant must
//! agree.

use gentor_core::alexander::{alexander_polynomial, determinant, fox_derivative};
use gentor_core::diagrams::{montesinos_diagram, two_bridge_diagram, validate, writhe};
use gentor_core::groups::{fill, h1, longitude, wirtinger, GroupPresentation, Slope, Word};
use gentor_core::tangles::{cf_eval, kn_descriptor, TangleWord};
use gentor_core::testutil::{corpus_rng, random_tangle_entries};
use gentor_core::{int, Int, IntPoly};
use num_traits::{Signed, Zero};

/// All nonzero-entry words with sum(|a_i|) <= budget (signs included).
fn all_words_up_to(budget: i64) -> Vec<Vec<i64>> {
    fn rec(remaining: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for mag in 1..=remaining {
            for sign in [1, -1] {
                cur.push(sign * mag);
                rec(remaining - mag, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(budget, &mut Vec::new(), &mut out);
    out
}

fn knot_diagram_of(entries: &[i64]) -> Option<(TangleWord, gentor_core::diagrams::PlanarDiagram)> {
    let w = TangleWord::with_default(entries).ok()?;
    let d = two_bridge_diagram(&w).ok()?;
    Some((w, d))
}

#[test]
fn determinant_equals_cf_numerator_exhaustive_small() {
    let mut checked = 0;
    for entries in all_words_up_to(6) {
        let Some((w, d)) = knot_diagram_of(&entries) else {
            continue;
        };
        assert!(validate(&d).ok, "{entries:?}");
        let delta = alexander_polynomial(&wirtinger(&d).unwrap()).unwrap();
        let num = cf_eval(&w).unwrap().numer().abs();
        assert_eq!(determinant(&delta), num, "{entries:?}");
        checked += 1;
    }
    assert!(checked > 100, "expected a substantial corpus, got {checked}");
}

#[test]
fn determinant_equals_cf_numerator_random_ten_crossing() {
    let mut rng = corpus_rng();
    let mut done = 0;
    while done < 50 {
        let entries = random_tangle_entries(&mut rng, 10);
        let Some((w, d)) = knot_diagram_of(&entries) else {
            continue;
        };
        let delta = alexander_polynomial(&wirtinger(&d).unwrap()).unwrap();
        assert_eq!(
            determinant(&delta),
            cf_eval(&w).unwrap().numer().abs(),
            "{entries:?}"
        );
        // delta(1) = +-1 and the normalized symmetry delta(t) = +-t^deg delta(1/t)
        assert_eq!(delta.eval(&int(1)).abs(), int(1), "{entries:?}");
        assert!(
            delta.eq_up_to_unit(&delta.reversed()),
            "symmetry fails on {entries:?}: {delta}"
        );
        done += 1;
    }
}

#[test]
fn eighteen_crossing_two_bridge_word() {
    let w = TangleWord::with_default(&[2, -2, 6, -7, 1]).unwrap();
    let d = two_bridge_diagram(&w).unwrap();
    assert_eq!(d.crossings().len(), 18);
    let delta = alexander_polynomial(&wirtinger(&d).unwrap()).unwrap();
    assert_eq!(determinant(&delta), int(93));
    assert_eq!(cf_eval(&w).unwrap().numer().abs(), int(93));
}

#[test]
fn knot_group_invariants_on_generated_diagrams() {
    let mut diagrams = vec![
        two_bridge_diagram(&TangleWord::with_default(&[3]).unwrap()).unwrap(),
        two_bridge_diagram(&TangleWord::with_default(&[2, 2]).unwrap()).unwrap(),
        two_bridge_diagram(&TangleWord::with_default(&[2, -2, 6, -7, 1]).unwrap()).unwrap(),
    ];
    for n in 2..=4 {
        diagrams.push(montesinos_diagram(&kn_descriptor(n).unwrap()).unwrap());
    }
    for d in &diagrams {
        let p = wirtinger(d).unwrap();
        assert!(h1(&p).is_infinite_cyclic(), "h1 of a knot exterior is Z");
        let lambda = longitude(d).unwrap();
        assert_eq!(lambda.exponent_sum_total(), 0, "0-framed longitude");
        assert_eq!(writhe(d), writhe(d));
    }
}

#[test]
fn column_choice_does_not_change_alexander() {
    // Deleting any generator column yields the same polynomial up to units:
    // check by permuting which generator is last.
    for entries in [&[3i64][..], &[2, 2], &[3, 1, 1]] {
        let d = two_bridge_diagram(&TangleWord::with_default(entries).unwrap()).unwrap();
        let p = wirtinger(&d).unwrap();
        let reference = alexander_polynomial(&p).unwrap();
        let g = p.generators().len();
        for target in 0..g {
            // swap generator `target` with the last one
            let mut names = p.generators().to_vec();
            names.swap(target, g - 1);
            let swap = |idx: usize| {
                if idx == target {
                    g - 1
                } else if idx == g - 1 {
                    target
                } else {
                    idx
                }
            };
            let relators: Vec<Word> = p.relators().iter().map(|r| r.remap(swap)).collect();
            let q = GroupPresentation::new(names, relators).unwrap();
            let delta = alexander_polynomial(&q).unwrap();
            assert_eq!(delta, reference, "column {target} on {entries:?}");
        }
    }
}

#[test]
fn fox_rows_sum_to_zero_on_generated_wirtinger() {
    for entries in [&[3i64][..], &[2, 2], &[2, -2, 2, 3]] {
        let Some((_, d)) = knot_diagram_of(entries) else {
            continue;
        };
        let p = wirtinger(&d).unwrap();
        let g = p.generators().len();
        for r in p.relators() {
            let mut sum = gentor_core::alexander::GroupRingElement::zero();
            for x in 0..g {
                sum = sum.add(&fox_derivative(r, x, g).unwrap());
            }
            assert!(sum.is_zero(), "{entries:?}");
        }
    }
}

#[test]
fn montesinos_fill_homology_lens_spaces() {
    for n in [2i64, 3] {
        let d = montesinos_diagram(&kn_descriptor(n).unwrap()).unwrap();
        let p = wirtinger(&d).unwrap();
        for pe in [12i64, 16, 30] {
            let filled = fill(&p, &Slope::new(pe, 1).unwrap()).unwrap();
            let inv = h1(&filled);
            assert_eq!(inv.factors, vec![Int::from(pe)], "K_{n} at {pe}/1");
        }
    }
}

#[test]
fn unknot_fill_examples() {
    let p = wirtinger(&gentor_core::diagrams::PlanarDiagram::unknot()).unwrap();
    let filled = fill(&p, &Slope::new(5, 1).unwrap()).unwrap();
    let delta = alexander_polynomial(&p).unwrap();
    assert_eq!(delta, IntPoly::one());
    assert_eq!(h1(&filled).factors, vec![int(5)]);
}
