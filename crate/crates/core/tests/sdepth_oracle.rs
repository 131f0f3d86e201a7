//! Unreduced brute force over all interval partitions, compared with the engine.

use pathdepth::families::path_ideal;
use pathdepth::sdepth::{build_poset, sdepth_decision_until, verify_partition, CharPoset, Engine, Mode, DEFAULT_MAX_POSET};
use pathdepth::MonomialIdeal;
use std::collections::BTreeSet;

fn leq(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn rho(g: &[u32], d: &[u32]) -> usize {
    d.iter().zip(g).filter(|(a, b)| a == b).count()
}

/// Exhaustive: the lex-least uncovered element is the bottom of its interval;
/// try every top with `ρ >= k` whose interval avoids covered points and stays
/// in the poset.
fn brute(poset: &CharPoset, k: usize) -> bool {
    let g = poset.g().exps().to_vec();
    let elems: Vec<Vec<u32>> = poset.elements().iter().map(|e| e.exps().to_vec()).collect();
    let set: BTreeSet<Vec<u32>> = elems.iter().cloned().collect();
    fn go(elems: &[Vec<u32>], set: &BTreeSet<Vec<u32>>, g: &[u32], k: usize, covered: &mut BTreeSet<Vec<u32>>) -> bool {
        let Some(c) = elems.iter().find(|e| !covered.contains(*e)) else {
            return true;
        };
        for d in elems {
            if !leq(c, d) || rho(g, d) < k {
                continue;
            }
            let inside: Vec<&Vec<u32>> = set.iter().filter(|e| leq(c, e) && leq(e, d)).collect();
            let count: usize = c.iter().zip(d).map(|(a, b)| (b - a) as usize + 1).product();
            if inside.len() != count || inside.iter().any(|e| covered.contains(*e)) {
                continue;
            }
            for e in &inside {
                covered.insert((*e).clone());
            }
            if go(elems, set, g, k, covered) {
                return true;
            }
            for e in &inside {
                covered.remove(*e);
            }
        }
        false
    }
    go(&elems, &set, &g, k, &mut BTreeSet::new())
}

fn compare(i: &MonomialIdeal, mode: Mode) {
    let p = build_poset(i, None, mode, None, DEFAULT_MAX_POSET).unwrap();
    if p.len() > 40 {
        return;
    }
    for k in 0..=i.n() + 1 {
        let want = brute(&p, k);
        for engine in [Engine::Sat, Engine::Backtrack] {
            let fast = sdepth_decision_until(&p, k, engine, None).unwrap();
            if let Some(part) = &fast {
                assert!(verify_partition(&p, part, k).accepted());
            }
            assert_eq!(fast.is_some(), want, "{i} {mode} k={k} {engine:?}");
        }
    }
}

#[test]
fn engine_matches_brute_force_on_paths() {
    for n in 1..=5 {
        for m in 1..=n {
            for t in 1..=2 {
                let i = path_ideal(n, m).unwrap().power(t).unwrap();
                compare(&i, Mode::Quotient);
                compare(&i, Mode::Ideal);
            }
        }
    }
}

#[test]
fn maximal_ideal_square_in_three_variables() {
    let m2 = MonomialIdeal::variables(3, 1..=3).unwrap().power(2).unwrap();
    compare(&m2, Mode::Ideal);
}
