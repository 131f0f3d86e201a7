//! Stanley depth through interval partitions of the characteristic poset.

mod certificate;
mod poset;
mod sat;
mod search;

pub use certificate::{verify_partition, Defect, Verdict};
pub use poset::{build_poset, default_g, CharPoset, Mode, DEFAULT_MAX_POSET};

use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal};
use serde::{Deserialize, Serialize};
use std::time::{Duration, Instant};

/// A partition of the poset into intervals `[c, d]`, each top having
/// `ρ(d) >= claimed_min_rho`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalPartition {
    pub g: ExponentVector,
    pub mode: Mode,
    pub intervals: Vec<(ExponentVector, ExponentVector)>,
    pub claimed_min_rho: usize,
}

/// How a single decision is searched. Both return certificates checked by
/// [`verify_partition`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    /// CDCL over the exact-cover encoding.
    #[default]
    Sat,
    /// Dancing-links style backtracking with a dead-end table.
    Backtrack,
}

impl std::str::FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sat" => Ok(Engine::Sat),
            "backtrack" => Ok(Engine::Backtrack),
            _ => Err(Error::Parameter(format!("unknown engine {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SdepthOptions {
    pub engine: Engine,
    pub g_override: Option<ExponentVector>,
    /// First `k` to try; the scan walks up on success and down on failure.
    /// Without it the scan is a binary search.
    pub start_hint: Option<usize>,
    pub timeout: Option<Duration>,
    pub max_poset: usize,
    /// Rerun the failing decision at `value + 1` before answering.
    pub reconfirm: bool,
}

impl Default for SdepthOptions {
    fn default() -> Self {
        SdepthOptions {
            engine: Engine::Sat,
            g_override: None,
            start_hint: None,
            timeout: Some(Duration::from_secs(60)),
            max_poset: DEFAULT_MAX_POSET,
            reconfirm: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SdepthResult {
    pub value: usize,
    pub certificate: IntervalPartition,
    pub poset_size: usize,
    /// Trivial bound from the poset shape.
    pub upper_bound: usize,
    /// Every decision run, in order.
    pub decisions: Vec<(usize, bool)>,
}

/// Search for a partition with all tops at `ρ >= k`.
pub fn sdepth_decision(poset: &CharPoset, k: usize) -> Option<IntervalPartition> {
    search::decide(poset, k, Engine::Sat, None).expect("no deadline and no row cap hit")
}

/// As [`sdepth_decision`] with a wall-clock deadline.
pub fn sdepth_decision_until(
    poset: &CharPoset,
    k: usize,
    engine: Engine,
    deadline: Option<Instant>,
) -> Result<Option<IntervalPartition>> {
    search::decide(poset, k, engine, deadline)
}

/// `sdepth(S/I)` or `sdepth(I)`.
pub fn sdepth(ideal: &MonomialIdeal, mode: Mode, opts: &SdepthOptions) -> Result<SdepthResult> {
    let poset = build_poset(ideal, None, mode, opts.g_override.as_ref(), opts.max_poset)?;
    sdepth_of_poset(&poset, opts)
}

/// `sdepth(I/J)` for `J ⊆ I`.
pub fn sdepth_pair(i: &MonomialIdeal, j: &MonomialIdeal, opts: &SdepthOptions) -> Result<SdepthResult> {
    let poset = build_poset(i, Some(j), Mode::Pair, opts.g_override.as_ref(), opts.max_poset)?;
    sdepth_of_poset(&poset, opts)
}

pub fn sdepth_of_poset(poset: &CharPoset, opts: &SdepthOptions) -> Result<SdepthResult> {
    if poset.is_empty() {
        return Err(Error::Domain("the module is zero".into()));
    }
    let started = Instant::now();
    scan(poset, opts, opts.timeout.map(|t| started + t)).map_err(|e| match e {
        Error::Timeout { .. } => Error::Timeout { millis: started.elapsed().as_millis() as u64 },
        e => e,
    })
}

fn scan(poset: &CharPoset, opts: &SdepthOptions, deadline: Option<Instant>) -> Result<SdepthResult> {
    let ub = poset.rho_upper_bound();
    let mut decisions = Vec::new();
    let mut best: Option<(usize, IntervalPartition)> = None;
    let mut run = |k: usize, best: &mut Option<(usize, IntervalPartition)>| -> Result<bool> {
        let r = search::decide(poset, k, opts.engine, deadline)?;
        decisions.push((k, r.is_some()));
        match r {
            Some(p) => {
                if best.as_ref().is_none_or(|(b, _)| k > *b) {
                    *best = Some((k, p));
                }
                Ok(true)
            }
            None => Ok(false),
        }
    };
    match opts.start_hint {
        Some(h) => {
            let h = h.min(ub);
            if run(h, &mut best)? {
                let mut k = h + 1;
                while k <= ub && run(k, &mut best)? {
                    k += 1;
                }
            } else {
                let mut k = h;
                while k > 0 {
                    k -= 1;
                    if run(k, &mut best)? {
                        break;
                    }
                }
            }
        }
        None => {
            let (mut lo, mut hi) = (0usize, ub);
            while lo <= hi {
                let mid = lo + (hi - lo) / 2;
                if run(mid, &mut best)? {
                    lo = mid + 1;
                } else if mid == 0 {
                    break;
                } else {
                    hi = mid - 1;
                }
            }
        }
    }
    let (value, certificate) = best.ok_or_else(|| Error::Internal("no partition found at k = 0".into()))?;
    let verdict = verify_partition(poset, &certificate, value);
    if !verdict.accepted() {
        return Err(Error::Internal(format!("certificate rejected: {}", verdict.defects[0])));
    }
    if opts.reconfirm && value < ub && search::decide(poset, value + 1, opts.engine, deadline)?.is_some() {
        return Err(Error::Internal(format!("decision at k = {} is not reproducible", value + 1)));
    }
    Ok(SdepthResult { value, certificate, poset_size: poset.len(), upper_bound: ub, decisions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::path_ideal;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec()).unwrap()
    }

    fn quotient(i: &MonomialIdeal) -> CharPoset {
        build_poset(i, None, Mode::Quotient, None, DEFAULT_MAX_POSET).unwrap()
    }

    #[test]
    fn path_3_2_decisions() {
        let p = quotient(&path_ideal(3, 2).unwrap());
        let part = sdepth_decision(&p, 1).unwrap();
        assert!(verify_partition(&p, &part, 1).accepted());
        assert!(sdepth_decision(&p, 2).is_none());
        let given = IntervalPartition {
            g: ev(&[1, 1, 1]),
            mode: Mode::Quotient,
            intervals: vec![
                (ev(&[0, 0, 0]), ev(&[1, 0, 0])),
                (ev(&[0, 1, 0]), ev(&[0, 1, 0])),
                (ev(&[0, 0, 1]), ev(&[1, 0, 1])),
            ],
            claimed_min_rho: 1,
        };
        assert!(verify_partition(&p, &given, 1).accepted());
    }

    #[test]
    fn empty_poset_decides_trivially() {
        let p = quotient(&MonomialIdeal::unit(3));
        for k in 0..4 {
            assert!(sdepth_decision(&p, k).unwrap().intervals.is_empty());
        }
        assert!(matches!(sdepth(&MonomialIdeal::unit(3), Mode::Quotient, &SdepthOptions::default()), Err(Error::Domain(_))));
        assert!(matches!(sdepth(&MonomialIdeal::zero(3), Mode::Ideal, &SdepthOptions::default()), Err(Error::Domain(_))));
    }

    #[test]
    fn known_values() {
        let o = SdepthOptions::default();
        assert_eq!(sdepth(&path_ideal(3, 2).unwrap(), Mode::Quotient, &o).unwrap().value, 1);
        for n in 1..=5 {
            let m = MonomialIdeal::variables(n, 1..=n).unwrap();
            assert_eq!(sdepth(&m, Mode::Quotient, &o).unwrap().value, 0);
            assert_eq!(sdepth(&MonomialIdeal::zero(n), Mode::Quotient, &o).unwrap().value, n);
        }
        let m3 = MonomialIdeal::variables(3, 1..=3).unwrap();
        assert_eq!(sdepth(&m3, Mode::Ideal, &o).unwrap().value, 2);
        let p = MonomialIdeal::principal(ev(&[1, 1, 1, 1]));
        assert_eq!(sdepth(&p, Mode::Ideal, &o).unwrap().value, 4);
    }

    #[test]
    fn hint_and_binary_scans_agree() {
        let i = path_ideal(5, 2).unwrap().power(2).unwrap();
        let a = sdepth(&i, Mode::Quotient, &SdepthOptions::default()).unwrap();
        for h in 0..=5 {
            let o = SdepthOptions { start_hint: Some(h), ..Default::default() };
            assert_eq!(sdepth(&i, Mode::Quotient, &o).unwrap().value, a.value);
        }
    }

    #[test]
    fn pair_mode() {
        let i = MonomialIdeal::variables(3, 1..=3).unwrap();
        let j = path_ideal(3, 2).unwrap();
        let r = sdepth_pair(&i, &j, &SdepthOptions::default()).unwrap();
        let p = build_poset(&i, Some(&j), Mode::Pair, None, 100).unwrap();
        assert!(verify_partition(&p, &r.certificate, r.value).accepted());
    }

    #[test]
    fn certificate_json_round_trip() {
        let r = sdepth(&path_ideal(4, 2).unwrap(), Mode::Ideal, &SdepthOptions::default()).unwrap();
        let s = serde_json::to_string(&r.certificate).unwrap();
        let back: IntervalPartition = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r.certificate);
        assert!(s.contains("\"mode\":\"ideal\""));
    }

    #[test]
    fn zero_timeout_reports_timeout() {
        let i = path_ideal(6, 2).unwrap().power(2).unwrap();
        let o = SdepthOptions { timeout: Some(Duration::ZERO), ..Default::default() };
        match sdepth(&i, Mode::Quotient, &o) {
            Err(Error::Timeout { .. }) | Ok(_) => {}
            Err(e) => panic!("{e}"),
        }
    }

    #[test]
    fn verifier_rejections() {
        let p = quotient(&path_ideal(3, 2).unwrap());
        let mut part = sdepth_decision(&p, 1).unwrap();
        part.intervals.push((ev(&[0, 0, 0]), ev(&[0, 0, 0])));
        let v = verify_partition(&p, &part, 1);
        assert!(v.defects.iter().any(|d| matches!(d, Defect::Overlap(_))));
        let mut part = sdepth_decision(&p, 1).unwrap();
        part.intervals[0].1 = ev(&[1, 1, 1]);
        let v = verify_partition(&p, &part, 1);
        assert!(v.defects.iter().any(|d| matches!(d, Defect::Outside(..))));
        let part = sdepth_decision(&p, 1).unwrap();
        assert!(!verify_partition(&p, &part, 2).accepted());
    }
}
