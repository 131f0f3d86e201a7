use super::sweep::Oracle;
use crate::error::{param, Error, Result};
use crate::families::{
    colon_power, colon_w_identity, path_ideal, proof_ladder, truncation, u_ideal, u_lemma_bounds,
    v_colon_identity, IdentityPair, WitnessParams,
};
use crate::monomial::{ExponentVector, MonomialIdeal};
use crate::par;
use crate::sdepth::Mode;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Outcome of one check. Timeouts and cap hits are `Skipped`, never values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "reason", rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn skipped(e: &Error) -> Status {
        Status::Skipped(match e {
            Error::Timeout { .. } => "timeout".to_string(),
            Error::ResourceLimit { what, .. } => format!("cap: {what}"),
            e => e.to_string(),
        })
    }

    pub fn is_fail(&self) -> bool {
        *self == Status::Fail
    }

    pub fn label(&self) -> &str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped(_) => "skipped",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Skipped(r) => write!(f, "skipped ({r})"),
            s => f.write_str(s.label()),
        }
    }
}

/// One named check with a human-readable detail line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckItem {
    pub name: String,
    #[serde(flatten)]
    pub status: Status,
    pub detail: String,
}

impl CheckItem {
    fn from_pair(p: &IdentityPair) -> CheckItem {
        let ok = p.holds();
        let detail = if ok {
            format!("{}", p.left)
        } else {
            format!("left {} != right {}", p.left, p.right)
        };
        CheckItem { name: p.name.clone(), status: Status::from_bool(ok), detail }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LemmaId {
    #[serde(rename = "colon-power")]
    ColonPower,
    #[serde(rename = "truncation")]
    Truncation,
    #[serde(rename = "ladder")]
    Ladder,
    #[serde(rename = "colon-w")]
    ColonW,
    #[serde(rename = "umt")]
    Umt,
    #[serde(rename = "vIv")]
    VIv,
}

impl LemmaId {
    pub const ALL: [LemmaId; 6] = [
        LemmaId::ColonPower,
        LemmaId::Truncation,
        LemmaId::Ladder,
        LemmaId::ColonW,
        LemmaId::Umt,
        LemmaId::VIv,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LemmaId::ColonPower => "colon-power",
            LemmaId::Truncation => "truncation",
            LemmaId::Ladder => "ladder",
            LemmaId::ColonW => "colon-w",
            LemmaId::Umt => "umt",
            LemmaId::VIv => "vIv",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LemmaId::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown lemma id {s:?}")))
    }
}

/// `v (I : v) = (v) ∩ I` for `I = I_{n,m}^t` and each prefix
/// `v = x_{n-m+1} ... x_{n-m+j}`, `0 <= j <= m`.
pub fn vi_v_pairs(n: usize, m: usize, t: usize) -> Result<Vec<IdentityPair>> {
    let i = path_ideal(n, m)?.power(t as u32)?;
    (0..=m)
        .map(|j| v_colon_identity(&i, &ExponentVector::consecutive(n, n - m + 1, n - m + j)?))
        .collect()
}

/// Identity checks for one parameter tuple. `k` is only read by truncation
/// (all `2 <= k <= m` when absent); colon-w reads `(m, t)` and derives
/// `(q, r)` from `n`.
pub fn identity_items(id: LemmaId, n: usize, m: usize, t: usize, k: Option<usize>) -> Result<Vec<CheckItem>> {
    if m == 0 || m > n {
        return param(format!("need 1 <= m <= n, got n={n}, m={m}"));
    }
    let pairs = match id {
        LemmaId::ColonPower => vec![colon_power(n, m, t)?],
        LemmaId::Truncation => match k {
            Some(k) => vec![truncation(n, m, k, t)?],
            None => {
                if m < 2 {
                    return param("truncation needs 1 <= m <= n, 2 <= k <= m and t >= 2");
                }
                (2..=m).map(|k| truncation(n, m, k, t)).collect::<Result<_>>()?
            }
        },
        LemmaId::Ladder => proof_ladder(n, m, t)?,
        LemmaId::ColonW => vec![colon_w_identity(WitnessParams::from_ring(n, m, t)?)?],
        LemmaId::VIv => vi_v_pairs(n, m, t)?,
        LemmaId::Umt => return param("umt takes (m, t), see umt_items"),
    };
    Ok(pairs.iter().map(CheckItem::from_pair).collect())
}

/// Every valid tuple of the identity lemmas with `n <= max_n` (`max_n_w`
/// for colon-w) and `2 <= t <= max_t`, in a fixed order.
pub fn identity_grid(max_n: usize, max_n_w: usize, max_t: usize, parallel: bool) -> Result<Vec<(LemmaId, CheckItem)>> {
    let mut jobs: Vec<(LemmaId, usize, usize, usize)> = Vec::new();
    for n in 1..=max_n {
        for m in 1..=n {
            for t in 2..=max_t {
                jobs.push((LemmaId::ColonPower, n, m, t));
                if m >= 2 {
                    jobs.push((LemmaId::Truncation, n, m, t));
                }
                if n >= 2 * m && m >= 2 {
                    jobs.push((LemmaId::Ladder, n, m, t));
                }
            }
        }
    }
    let mut witness = Vec::new();
    for m in 2..=max_n_w {
        for t in 2..=max_n_w {
            for q in 1..=max_n_w {
                for r in 0..=m {
                    match WitnessParams::new(m, t, q, r) {
                        Ok(p) if p.n() <= max_n_w => witness.push(p),
                        _ => {}
                    }
                }
            }
        }
    }
    let results = par::map(&jobs, parallel, |&(id, n, m, t)| identity_items(id, n, m, t, None));
    let mut flat: Vec<(LemmaId, CheckItem)> = Vec::new();
    for ((id, ..), items) in jobs.iter().zip(results) {
        flat.extend(items?.into_iter().map(|i| (*id, i)));
    }
    for r in par::map(&witness, parallel, |&p| colon_w_identity(p).map(|pair| CheckItem::from_pair(&pair))) {
        flat.push((LemmaId::ColonW, r?));
    }
    Ok(flat)
}

/// Items 1 to 4 on `U_{m,t}`: depth of the quotient equals `m - 1`, and the
/// computed Stanley depths of quotient and ideal sit inside their bounds.
pub fn umt_items(m: usize, t: usize, oracle: &dyn Oracle) -> Result<Vec<CheckItem>> {
    let b = u_lemma_bounds(m, t)?;
    let u = u_ideal(m, t)?;
    let mut out = Vec::new();
    let depth = oracle.pd_quotient(&u).map(|pd| (u.n() - pd) as i64);
    out.push(match depth {
        Ok(d) => CheckItem {
            name: "depth".into(),
            status: Status::from_bool(d == b.depth),
            detail: format!("depth(S/U) = {d}, expected {}", b.depth),
        },
        Err(e) => CheckItem { name: "depth".into(), status: Status::skipped(&e), detail: e.to_string() },
    });
    let hint = Some(b.quotient_lower as usize);
    out.push(range_item(&u, Mode::Quotient, hint, b.quotient_lower, b.quotient_upper, oracle));
    out.push(range_item(&u, Mode::Ideal, None, b.ideal_lower, b.ideal_upper, oracle));
    Ok(out)
}

fn range_item(u: &MonomialIdeal, mode: Mode, hint: Option<usize>, lo: i64, hi: i64, oracle: &dyn Oracle) -> CheckItem {
    let name = format!("sdepth {mode}");
    match oracle.sdepth(u, mode, hint) {
        Ok(r) => {
            let v = r.value as i64;
            CheckItem {
                name,
                status: Status::from_bool(lo <= v && v <= hi),
                detail: format!("{v} in [{lo}, {hi}]"),
            }
        }
        Err(e) => CheckItem { name, status: Status::skipped(&e), detail: e.to_string() },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Direct;

    #[test]
    fn lemma_ids_round_trip() {
        for id in LemmaId::ALL {
            assert_eq!(id.as_str().parse::<LemmaId>().unwrap(), id);
            assert_eq!(serde_json::to_string(&id).unwrap(), format!("\"{id}\""));
        }
        assert!("nope".parse::<LemmaId>().is_err());
    }

    #[test]
    fn examples() {
        let items = identity_items(LemmaId::ColonPower, 3, 2, 2, None).unwrap();
        assert_eq!(items[0].status, Status::Pass);
        let items = identity_items(LemmaId::Truncation, 4, 2, 2, Some(2)).unwrap();
        assert_eq!(items[0].status, Status::Pass);
        assert_eq!(items[0].detail, "(x3, x1^2*x2^2)");
        assert!(identity_items(LemmaId::Truncation, 4, 2, 2, Some(3)).is_err());
        assert!(identity_items(LemmaId::VIv, 5, 2, 2, None).unwrap().iter().all(|i| i.status == Status::Pass));
    }

    #[test]
    fn grid_failures_are_the_single_block_colon_w_tuples() {
        let items = identity_grid(6, 7, 3, true).unwrap();
        assert_eq!(items, identity_grid(6, 7, 3, false).unwrap());
        for (id, item) in &items {
            let single_block_with_rest = item.name.contains("q=1 ") && !item.name.contains("r=0");
            assert_eq!(item.status.is_fail(), *id == LemmaId::ColonW && single_block_with_rest, "{}", item.name);
        }
    }

    #[test]
    fn umt_2_2() {
        let items = umt_items(2, 2, &Direct::default()).unwrap();
        assert!(items.iter().all(|i| i.status == Status::Pass), "{items:?}");
        assert_eq!(items[1].detail, "1 in [1, 2]");
    }

    #[test]
    fn status_json() {
        let s = serde_json::to_string(&Status::Skipped("timeout".into())).unwrap();
        assert_eq!(s, r#"{"status":"skipped","reason":"timeout"}"#);
        assert_eq!(serde_json::to_string(&Status::Pass).unwrap(), r#"{"status":"pass"}"#);
    }
}
