use super::poset::CharPoset;
use super::search::for_each_in_box;
use super::IntervalPartition;
use std::collections::HashMap;
use std::fmt;

/// Why a certificate was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Defect {
    /// Certificate was built for a different `g` or mode.
    Header(String),
    /// `c <= d <= g` fails.
    Bounds(usize),
    /// An interval contains a point outside the poset.
    Outside(usize, Vec<u32>),
    /// A point lies in two intervals.
    Overlap(Vec<u32>),
    /// A poset element is in no interval.
    Uncovered(Vec<u32>),
    /// `ρ(d)` is below the claimed minimum.
    Rho(usize, usize),
    /// The claimed minimum is below the requested `k`.
    Claim(usize, usize),
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Defect::Header(s) => write!(f, "header: {s}"),
            Defect::Bounds(i) => write!(f, "bounds: interval {i} is not c <= d <= g"),
            Defect::Outside(i, e) => write!(f, "outside: interval {i} contains {e:?}"),
            Defect::Overlap(e) => write!(f, "overlap: {e:?} covered twice"),
            Defect::Uncovered(e) => write!(f, "uncovered: {e:?}"),
            Defect::Rho(i, r) => write!(f, "rho: interval {i} has top at rho {r}"),
            Defect::Claim(c, k) => write!(f, "claim: min rho {c} is below {k}"),
        }
    }
}

/// Outcome of [`verify_partition`]; accepted iff there are no defects.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Verdict {
    pub defects: Vec<Defect>,
}

impl Verdict {
    pub fn accepted(&self) -> bool {
        self.defects.is_empty()
    }
}

const MAX_DEFECTS: usize = 32;

/// Checks a certificate against the poset by direct enumeration, sharing
/// nothing with the search beyond box iteration.
pub fn verify_partition(poset: &CharPoset, part: &IntervalPartition, k: usize) -> Verdict {
    let mut defects = Vec::new();
    let g = poset.g().exps();
    if part.g.exps() != g {
        defects.push(Defect::Header(format!("g is {} but the poset has {}", part.g, poset.g())));
    }
    if part.mode != poset.mode() {
        defects.push(Defect::Header(format!("mode is {} but the poset has {}", part.mode, poset.mode())));
    }
    if !defects.is_empty() {
        return Verdict { defects };
    }
    if part.claimed_min_rho < k {
        defects.push(Defect::Claim(part.claimed_min_rho, k));
    }
    let mut seen: HashMap<Vec<u32>, usize> = HashMap::new();
    for (idx, (c, d)) in part.intervals.iter().enumerate() {
        let (c, d) = (c.exps(), d.exps());
        let ok = c.len() == g.len()
            && d.len() == g.len()
            && c.iter().zip(d).all(|(a, b)| a <= b)
            && d.iter().zip(g).all(|(a, b)| a <= b);
        if !ok {
            defects.push(Defect::Bounds(idx));
            continue;
        }
        let r = d.iter().zip(g).filter(|(a, b)| a == b).count();
        if r < part.claimed_min_rho {
            defects.push(Defect::Rho(idx, r));
        }
        let mut outside = None;
        for_each_in_box(c, d, |e| {
            if !poset.contains(e) {
                outside.get_or_insert_with(|| e.to_vec());
            }
            *seen.entry(e.to_vec()).or_default() += 1;
        });
        if let Some(e) = outside {
            defects.push(Defect::Outside(idx, e));
        }
    }
    let mut overlaps: Vec<_> = seen.iter().filter(|(_, &m)| m > 1).map(|(e, _)| e.clone()).collect();
    overlaps.sort();
    defects.extend(overlaps.into_iter().map(Defect::Overlap));
    for e in poset.elements() {
        if defects.len() >= MAX_DEFECTS {
            break;
        }
        if !seen.contains_key(e.exps()) {
            defects.push(Defect::Uncovered(e.exps().to_vec()));
        }
    }
    defects.truncate(MAX_DEFECTS);
    Verdict { defects }
}
