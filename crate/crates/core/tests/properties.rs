//! Algebra-law and random-corpus properties across the exact kernels and the
//! word machinery.

use gentor_core::exact::{coker_element_order, positive_real_root_count, snf};
use gentor_core::groups::{
    element_h1_order, fill, h1, tietze_simplify, wirtinger, GroupPresentation, Slope, Word,
};
use gentor_core::tangles::{cf_eval, two_bridge_equivalent, TangleWord};
use gentor_core::testutil::{
    bisection_positive_root_count, corpus_rng, random_matrix, random_poly, random_word,
};
use gentor_core::{int, Int};
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::Rng;

#[test]
fn snf_invariants_random_corpus() {
    let mut rng = corpus_rng();
    for trial in 0..500 {
        let rows = rng.gen_range(0..=6);
        let cols = rng.gen_range(0..=6);
        let m = random_matrix(&mut rng, rows, cols);
        let s = snf(&m);
        assert_eq!(
            s.u.mul(&m).unwrap().mul(&s.v).unwrap(),
            s.d,
            "UMV = D failed on trial {trial}: {m:?}"
        );
        assert_eq!(s.u.determinant().unwrap().abs(), int(1), "U not unimodular");
        assert_eq!(s.v.determinant().unwrap().abs(), int(1), "V not unimodular");
        assert!(s.d.is_diagonal());
        let diag = s.d.diagonal();
        for w in diag.windows(2) {
            assert!(!w[0].is_negative() && !w[1].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero(), "zeros must trail: {diag:?}");
            } else {
                assert!((w[1].clone() % w[0].clone()).is_zero(), "chain: {diag:?}");
            }
        }
        if rows == cols && rows > 0 {
            let det = m.determinant().unwrap().abs();
            if !det.is_zero() {
                let product = diag.iter().fold(int(1), |acc, d| acc * d.clone());
                assert_eq!(product, det, "invariant factor product vs |det|");
            }
        }
    }
}

#[test]
fn sturm_agrees_with_bisection_oracle() {
    let mut rng = corpus_rng();
    for trial in 0..200 {
        let p = random_poly(&mut rng, 8);
        let sturm = positive_real_root_count(&p).unwrap();
        let oracle = bisection_positive_root_count(&p);
        assert_eq!(sturm, oracle, "trial {trial} on {p}");
    }
}

#[test]
fn coker_order_divisibility() {
    let mut rng = corpus_rng();
    for _ in 0..100 {
        let rows = rng.gen_range(1..=4);
        let cols = rng.gen_range(0..=4);
        let m = random_matrix(&mut rng, rows, cols);
        let v: Vec<Int> = (0..rows).map(|_| int(rng.gen_range(-5i64..=5))).collect();
        let ord = coker_element_order(&m, &v).unwrap();
        for k in 1i64..=4 {
            let kv: Vec<Int> = v.iter().map(|x| x.clone() * int(k)).collect();
            let ord_kv = coker_element_order(&m, &kv).unwrap();
            if !ord.is_zero() && !ord_kv.is_zero() {
                // order(v) divides order(k v) * k
                assert!(
                    (ord_kv.clone() * int(k) % ord.clone()).is_zero(),
                    "ord {ord} vs ord(k v) {ord_kv}, k = {k}"
                );
            }
        }
        // lattice members have order exactly 1
        if cols > 0 {
            let x: Vec<Int> = (0..cols).map(|_| int(rng.gen_range(-3i64..=3))).collect();
            let mx = m.mul_vec(&x).unwrap();
            assert_eq!(coker_element_order(&m, &mx).unwrap(), int(1));
        }
    }
}

#[test]
fn tietze_preserves_h1_on_random_presentations() {
    let mut rng = corpus_rng();
    let mut done = 0;
    while done < 50 {
        let gens = rng.gen_range(1..=4);
        let rels = rng.gen_range(0..=4);
        let names: Vec<String> = (1..=gens).map(|i| format!("x{i}")).collect();
        let relators: Vec<Word> = (0..rels).map(|_| random_word(&mut rng, gens, 6)).collect();
        let p = GroupPresentation::new(names, relators).unwrap();
        let marked = p
            .clone()
            .with_marking("probe", random_word(&mut rng, gens, 4))
            .unwrap();
        let s = tietze_simplify(&marked, 8);
        assert_eq!(h1(&s), h1(&marked), "h1 changed: {marked} -> {s}");
        let before = element_h1_order(&marked, marked.marking("probe").unwrap()).unwrap();
        let after = element_h1_order(&s, s.marking("probe").unwrap()).unwrap();
        assert_eq!(before, after, "marked order changed: {marked} -> {s}");
        done += 1;
    }
}

#[test]
fn fill_h1_is_zp_for_random_slopes() {
    let mut rng = corpus_rng();
    let diagram = gentor_core::diagrams::two_bridge_diagram(
        &TangleWord::with_default(&[2, 2]).unwrap(),
    )
    .unwrap();
    let p = wirtinger(&diagram).unwrap();
    let mut done = 0;
    while done < 20 {
        let pe = rng.gen_range(2i64..=60);
        let qe = rng.gen_range(1i64..=5);
        if num_integer::gcd(pe, qe) != 1 {
            continue;
        }
        let filled = fill(&p, &Slope::new(pe, qe).unwrap()).unwrap();
        let inv = h1(&filled);
        assert_eq!(inv.factors, vec![int(pe)], "slope {pe}/{qe}");
        done += 1;
    }
}

proptest! {
    #[test]
    fn free_reduce_laws(raw in prop::collection::vec((0usize..4, -3i64..=3), 0..12)) {
        let w = Word::from_runs(raw.into_iter().filter(|&(_, e)| e != 0));
        let r = w.free_reduce();
        prop_assert_eq!(r.clone(), r.free_reduce());
        prop_assert!(r.letter_len() <= w.letter_len());
        prop_assert!(w.concat(&w.inverse()).free_reduce().is_identity());
    }

    #[test]
    fn free_reduce_is_product_morphism(
        a in prop::collection::vec((0usize..3, -2i64..=2), 0..8),
        b in prop::collection::vec((0usize..3, -2i64..=2), 0..8),
    ) {
        let u = Word::from_runs(a.into_iter().filter(|&(_, e)| e != 0));
        let v = Word::from_runs(b.into_iter().filter(|&(_, e)| e != 0));
        let lhs = u.concat(&v).free_reduce();
        let rhs = u.free_reduce().concat(&v.free_reduce()).free_reduce();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn positive_words_dominant_numerator(entries in prop::collection::vec(1i64..=7, 1..6), first in 2i64..=7) {
        let mut all = vec![first];
        all.extend(entries);
        let w = TangleWord::with_default(&all).unwrap();
        let f = cf_eval(&w).unwrap();
        prop_assert!(f.numer() > f.denom());
        prop_assert!(f.denom() > &int(0));
    }

    #[test]
    fn two_bridge_equivalence_relation(
        p in prop::sample::select(vec![5i64, 7, 9, 11, 13, 15]),
        a in 1i64..=14,
        b in 1i64..=14,
        c in 1i64..=14,
    ) {
        // restrict to units mod p so normalization preconditions hold
        prop_assume!(num_integer::gcd(a, p) == 1);
        prop_assume!(num_integer::gcd(b, p) == 1);
        prop_assume!(num_integer::gcd(c, p) == 1);
        prop_assume!(a % p != 0 && b % p != 0 && c % p != 0);
        let fa = gentor_core::frac(p, a);
        let fb = gentor_core::frac(p, b);
        let fc = gentor_core::frac(p, c);
        // reflexive
        prop_assert!(two_bridge_equivalent(&fa, &fa).unwrap());
        // symmetric
        prop_assert_eq!(
            two_bridge_equivalent(&fa, &fb).unwrap(),
            two_bridge_equivalent(&fb, &fa).unwrap()
        );
        // transitive
        if two_bridge_equivalent(&fa, &fb).unwrap() && two_bridge_equivalent(&fb, &fc).unwrap() {
            prop_assert!(two_bridge_equivalent(&fa, &fc).unwrap());
        }
    }

    #[test]
    fn presentation_text_round_trip(
        gens in 1usize..4,
        rel_data in prop::collection::vec(prop::collection::vec((0usize..3, -2i64..=2), 0..6), 0..3),
    ) {
        let names: Vec<String> = (1..=gens).map(|i| format!("g{i}")).collect();
        let relators: Vec<Word> = rel_data
            .into_iter()
            .map(|raw| Word::from_runs(raw.into_iter().filter(|&(g, e)| g < gens && e != 0)))
            .collect();
        let p = GroupPresentation::new(names, relators).unwrap();
        let text = p.to_string();
        let back: GroupPresentation = text.parse().unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back, p);
    }
}
