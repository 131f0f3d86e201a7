use super::{ExponentVector, MonomialIdeal};
use crate::error::{Error, Result};
use std::collections::HashSet;

pub const DEFAULT_MAX_GENS: usize = 22;
pub const DEFAULT_MAX_LATTICE: usize = 200_000;

/// The lcm lattice of `I` without its bottom element: every lcm of a
/// nonempty subset of `G(I)`, deduplicated and sorted lexicographically.
///
/// Built by closing under joins one generator at a time, which visits each
/// distinct lcm instead of each of the `2^|G(I)|` subsets.
pub fn lcm_lattice(
    ideal: &MonomialIdeal,
    max_gens: usize,
    max_lattice: usize,
) -> Result<Vec<ExponentVector>> {
    if ideal.num_gens() > max_gens {
        return Err(Error::ResourceLimit {
            what: "generator count",
            actual: ideal.num_gens(),
            cap: max_gens,
        });
    }
    let mut seen: HashSet<ExponentVector> = HashSet::new();
    for g in ideal.gens() {
        let mut fresh: Vec<ExponentVector> = seen.iter().map(|l| l.lcm(g)).collect::<Result<_>>()?;
        fresh.push(g.clone());
        seen.extend(fresh);
        if seen.len() > max_lattice {
            return Err(Error::ResourceLimit {
                what: "lcm lattice size",
                actual: seen.len(),
                cap: max_lattice,
            });
        }
    }
    let mut out: Vec<ExponentVector> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec()).unwrap()
    }

    /// Oracle: enumerate every nonempty subset of the generators.
    fn subset_joins(ideal: &MonomialIdeal) -> Vec<ExponentVector> {
        let g = ideal.gens();
        let mut out: Vec<ExponentVector> = (1u32..(1 << g.len()))
            .map(|mask| {
                let mut acc = vec![0u32; ideal.n()];
                for (i, gi) in g.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        for (a, &b) in acc.iter_mut().zip(gi.exps()) {
                            *a = (*a).max(b);
                        }
                    }
                }
                ev(&acc)
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    fn path(n: usize, m: usize) -> MonomialIdeal {
        let gens = (1..=n + 1 - m).map(|i| ExponentVector::consecutive(n, i, i + m - 1).unwrap());
        MonomialIdeal::minimalize(n, gens).unwrap()
    }

    #[test]
    fn path_lattices_match_subset_enumeration() {
        let l = lcm_lattice(&path(3, 2), 22, 1000).unwrap();
        assert_eq!(l, vec![ev(&[0, 1, 1]), ev(&[1, 1, 0]), ev(&[1, 1, 1])]);
        // Three generators, seven subsets, but lcm(g1,g3) = lcm(g1,g2,g3).
        let l4 = lcm_lattice(&path(4, 2), 22, 1000).unwrap();
        assert_eq!(l4, subset_joins(&path(4, 2)));
        assert_eq!(l4.len(), 6);
        for (n, m) in [(5, 2), (6, 3), (7, 2), (6, 1)] {
            let i = path(n, m);
            assert_eq!(lcm_lattice(&i, 22, 1 << 20).unwrap(), subset_joins(&i));
        }
    }

    #[test]
    fn principal_lattice_is_the_generator() {
        let i = MonomialIdeal::principal(ev(&[2, 0, 1]));
        assert_eq!(lcm_lattice(&i, 22, 10).unwrap(), vec![ev(&[2, 0, 1])]);
    }

    #[test]
    fn caps_are_reported() {
        let i = path(8, 1);
        assert!(matches!(
            lcm_lattice(&i, 4, 1000),
            Err(Error::ResourceLimit { cap: 4, .. })
        ));
        assert!(matches!(
            lcm_lattice(&i, 22, 10),
            Err(Error::ResourceLimit { what: "lcm lattice size", .. })
        ));
    }
}
