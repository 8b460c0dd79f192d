use super::{GroupPresentation, Word};
use log::debug;

/// Canonical key of a relator up to cyclic rotation and inversion; used to
/// drop redundant copies.
fn cyclic_key(w: &Word) -> Vec<(usize, i8)> {
    let letters: Vec<(usize, i8)> = w.letters().collect();
    let n = letters.len();
    if n == 0 {
        return letters;
    }
    let mut best: Option<Vec<(usize, i8)>> = None;
    let inverse: Vec<(usize, i8)> = letters.iter().rev().map(|&(g, s)| (g, -s)).collect();
    for candidate in [letters, inverse] {
        for k in 0..n {
            let mut rot = candidate[k..].to_vec();
            rot.extend_from_slice(&candidate[..k]);
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap()
}

/// Reduce all relators (freely and cyclically), drop empties and duplicates
/// up to rotation/inversion.
fn normalize_relators(p: &mut GroupPresentation) {
    let mut seen = Vec::new();
    let mut kept = Vec::new();
    for r in p.relators() {
        let r = r.cyclic_reduce();
        if r.is_identity() {
            continue;
        }
        let key = cyclic_key(&r);
        if seen.contains(&key) {
            continue;
        }
        seen.push(key);
        kept.push(r);
    }
    *p = rebuild(p, p.generators().to_vec(), kept);
}

fn rebuild(
    p: &GroupPresentation,
    generators: Vec<String>,
    relators: Vec<Word>,
) -> GroupPresentation {
    let mut out = GroupPresentation::new(generators, relators).expect("indices stay in range");
    for (name, w) in p.markings() {
        out = out
            .with_marking(name, w.clone())
            .expect("indices stay in range");
    }
    out
}

/// Find a relator containing some generator exactly once (as a single letter)
/// — the generator can then be eliminated. Deterministic: shortest relator
/// first, then relator index, then generator index.
fn find_elimination(p: &GroupPresentation) -> Option<(usize, usize)> {
    let mut order: Vec<usize> = (0..p.relators().len()).collect();
    order.sort_by_key(|&i| (p.relators()[i].letter_len(), i));
    for ri in order {
        let r = &p.relators()[ri];
        for g in 0..p.generators().len() {
            let occurrences: u64 = r
                .runs()
                .iter()
                .filter(|&&(rg, _)| rg == g)
                .map(|&(_, e)| e.unsigned_abs())
                .sum();
            if occurrences == 1 {
                return Some((ri, g));
            }
        }
    }
    None
}

/// Relator-driven generator elimination plus relator reduction, at most
/// `budget` eliminations. Returns a presentation of the same group; never
/// increases the generator count; markings are rewritten through the
/// eliminations.
pub fn tietze_simplify(p: &GroupPresentation, budget: u64) -> GroupPresentation {
    let mut p = p.clone();
    normalize_relators(&mut p);
    for _ in 0..budget {
        let Some((ri, g)) = find_elimination(&p) else {
            break;
        };
        // r = u g^e v  =>  g = (u^-1 v^-1)^e
        let r = p.relators()[ri].clone();
        let letters: Vec<(usize, i8)> = r.letters().collect();
        let pos = letters
            .iter()
            .position(|&(lg, _)| lg == g)
            .expect("candidate has the generator");
        let e = letters[pos].1;
        let u = Word::from_runs(letters[..pos].iter().map(|&(lg, s)| (lg, s as i64)));
        let v = Word::from_runs(letters[pos + 1..].iter().map(|&(lg, s)| (lg, s as i64)));
        let replacement = u
            .inverse()
            .concat(&v.inverse())
            .pow(e as i64)
            .free_reduce();
        debug!(
            "tietze: eliminating {} via relator {} (|r| = {})",
            p.generators()[g],
            ri,
            r.letter_len()
        );

        let remap = |idx: usize| if idx > g { idx - 1 } else { idx };
        let generators: Vec<String> = p
            .generators()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != g)
            .map(|(_, name)| name.clone())
            .collect();
        let relators: Vec<Word> = p
            .relators()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != ri)
            .map(|(_, w)| w.substitute(g, &replacement).free_reduce().remap(remap))
            .collect();
        let mut out = GroupPresentation::new(generators, relators).expect("remapped in range");
        for (name, w) in p.markings() {
            let w = w.substitute(g, &replacement).free_reduce().remap(remap);
            out = out.with_marking(name, w).expect("remapped in range");
        }
        p = out;
        normalize_relators(&mut p);
    }
    p
}
