use super::checks::Status;
use crate::depth::{pd_quotient, BettiOptions};
use crate::error::Result;
use crate::families::{pd_formula, phi, sdepth_upper_bounds, Branch, PathParams, SdepthBounds};
use crate::monomial::MonomialIdeal;
use crate::par;
use crate::sdepth::{sdepth, Mode, SdepthOptions, SdepthResult};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::time::Instant;

/// Where sweep cells get their numbers from. The CLI wraps [`Direct`] with
/// a cache.
pub trait Oracle: Sync {
    fn pd_quotient(&self, ideal: &MonomialIdeal) -> Result<usize>;

    /// `hint` only steers the scan, never the answer.
    fn sdepth(&self, ideal: &MonomialIdeal, mode: Mode, hint: Option<usize>) -> Result<SdepthResult>;
}

/// Straight calls into the engines.
#[derive(Clone, Debug, Default)]
pub struct Direct {
    pub betti: BettiOptions,
    pub sdepth: SdepthOptions,
}

impl Oracle for Direct {
    fn pd_quotient(&self, ideal: &MonomialIdeal) -> Result<usize> {
        pd_quotient(ideal, &self.betti)
    }

    fn sdepth(&self, ideal: &MonomialIdeal, mode: Mode, hint: Option<usize>) -> Result<SdepthResult> {
        let opts = SdepthOptions { start_hint: hint, ..self.sdepth.clone() };
        sdepth(ideal, mode, &opts)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub n: (usize, usize),
    pub m: (usize, usize),
    pub t: (usize, usize),
    pub sdepth_quotient: bool,
    pub sdepth_ideal: bool,
    /// Run cells on the rayon pool.
    pub parallel: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { n: (1, 6), m: (1, 6), t: (1, 3), sdepth_quotient: false, sdepth_ideal: false, parallel: true }
    }
}

/// One `(n, m, t)` cell. Values that could not be computed are `None` and
/// the matching check is skipped with the reason.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: usize,
    pub m: usize,
    pub t: usize,
    pub branch: Branch,
    pub num_gens: usize,
    pub depth_computed: Option<i64>,
    pub phi: i64,
    pub pd_computed: Option<i64>,
    pub pd_formula: i64,
    pub sdepth_quotient: Option<i64>,
    pub sdepth_ideal: Option<i64>,
    pub bounds: SdepthBounds,
    pub checks: BTreeMap<String, Status>,
    pub runtime_ms: u64,
}

impl SweepRow {
    pub fn failed(&self) -> bool {
        self.checks.values().any(Status::is_fail)
    }
}

/// Computes one cell. Engine errors become skipped checks.
pub fn sweep_cell(p: PathParams, cfg: &SweepConfig, oracle: &dyn Oracle) -> Result<SweepRow> {
    let start = Instant::now();
    let (n, m, t) = (p.n, p.m, p.t);
    let ideal = p.ideal()?;
    let f = phi(n, m, t)?;
    let pd_f = pd_formula(n, m, t)?;
    let bounds = sdepth_upper_bounds(n, m, t)?;
    let mut checks = BTreeMap::new();

    let pd = oracle.pd_quotient(&ideal);
    let (depth_computed, pd_computed) = match &pd {
        Ok(pd) => (Some(n as i64 - *pd as i64), Some(*pd as i64)),
        Err(_) => (None, None),
    };
    match &pd {
        Ok(_) => {
            checks.insert("depth".into(), Status::from_bool(depth_computed == Some(f.value)));
            checks.insert("pd".into(), Status::from_bool(pd_computed == Some(pd_f)));
        }
        Err(e) => {
            checks.insert("depth".into(), Status::skipped(e));
            checks.insert("pd".into(), Status::skipped(e));
        }
    }

    // sdepth >= depth here, so phi is where the scan starts
    let mut sdepth_quotient = None;
    if cfg.sdepth_quotient {
        match oracle.sdepth(&ideal, Mode::Quotient, Some(f.value.max(0) as usize)) {
            Ok(r) => {
                let v = r.value as i64;
                sdepth_quotient = Some(v);
                checks.insert("sandwich".into(), Status::from_bool(f.value <= v && v <= bounds.quotient_upper));
            }
            Err(e) => {
                checks.insert("sandwich".into(), Status::skipped(&e));
            }
        }
    }
    let mut sdepth_ideal = None;
    if cfg.sdepth_ideal {
        match oracle.sdepth(&ideal, Mode::Ideal, Some(f.value.max(0) as usize + 1)) {
            Ok(r) => {
                let v = r.value as i64;
                sdepth_ideal = Some(v);
                checks.insert("ideal_lower".into(), Status::from_bool(v > f.value));
                checks.insert("ideal_upper".into(), Status::from_bool(v <= bounds.ideal_upper));
            }
            Err(e) => {
                checks.insert("ideal_lower".into(), Status::skipped(&e));
                checks.insert("ideal_upper".into(), Status::skipped(&e));
            }
        }
    }
    Ok(SweepRow {
        n,
        m,
        t,
        branch: f.branch,
        num_gens: ideal.num_gens(),
        depth_computed,
        phi: f.value,
        pd_computed,
        pd_formula: pd_f,
        sdepth_quotient,
        sdepth_ideal,
        bounds,
        checks,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

/// Every valid cell of the grid in `(n, m, t)` order, plus the power
/// monotonicity check `sdepth(S/I^t) <= sdepth(S/I^{t-1})` between
/// neighbouring rows.
pub fn run_sweep(cfg: &SweepConfig, oracle: &dyn Oracle) -> Result<Vec<SweepRow>> {
    let mut cells = Vec::new();
    for n in cfg.n.0.max(1)..=cfg.n.1 {
        for m in cfg.m.0.max(1)..=cfg.m.1.min(n) {
            for t in cfg.t.0.max(1)..=cfg.t.1 {
                cells.push(PathParams::new(n, m, t)?);
            }
        }
    }
    let mut rows = par::map(&cells, cfg.parallel, |p| sweep_cell(*p, cfg, oracle))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| (r.n, r.m, r.t));
    if cfg.sdepth_quotient {
        for i in 1..rows.len() {
            let (prev, cur) = (&rows[i - 1], &rows[i]);
            if (prev.n, prev.m, prev.t + 1) != (cur.n, cur.m, cur.t) {
                continue;
            }
            let status = match (prev.sdepth_quotient, cur.sdepth_quotient) {
                (Some(a), Some(b)) => Status::from_bool(b <= a),
                _ => Status::Skipped("neighbour unknown".into()),
            };
            rows[i].checks.insert("monotone".into(), status);
        }
    }
    Ok(rows)
}
