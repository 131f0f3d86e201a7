//! Closed-form values for the path-ideal families.
//!
//! Every quantity takes plain integers and returns `i64`; the parameter
//! checks mirror [`super::PathParams`].

use super::PathParams;
use crate::error::{param, Result};
use serde::{Deserialize, Serialize};

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -(-a).div_euclid(b)
}

/// Which case of the piecewise depth formula applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// `t <= n + 1 - m`
    Generic,
    /// `t > n + 1 - m`
    Saturated,
}

impl Branch {
    pub fn of(n: usize, m: usize, t: usize) -> Branch {
        if t + m <= n + 1 {
            Branch::Generic
        } else {
            Branch::Saturated
        }
    }
}

/// A division `dividend = (m+1) q + r` with `0 <= r <= m`.
///
/// Two different dividends show up: [`EuclidSplit::depth_form`] divides
/// `n - t + 2` (the argument of the floor/ceil terms), while
/// [`EuclidSplit::colon_form`] divides `n - t + 1`, i.e. `n = q(m+1) + t - 1 + r`,
/// which sizes the colon-by-`w(m,t,q)` construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EuclidSplit {
    pub dividend: i64,
    pub q: i64,
    pub r: i64,
}

impl EuclidSplit {
    fn of(dividend: i64, m: usize) -> EuclidSplit {
        let d = m as i64 + 1;
        EuclidSplit {
            dividend,
            q: floor_div(dividend, d),
            r: dividend.rem_euclid(d),
        }
    }

    /// `n - t + 2 = (m+1) q + r`.
    pub fn depth_form(n: usize, m: usize, t: usize) -> EuclidSplit {
        Self::of(n as i64 - t as i64 + 2, m)
    }

    /// `n = (m+1) q + t - 1 + r`; only meaningful for `n >= m + t - 1`,
    /// which is where `q >= 1`.
    pub fn colon_form(n: usize, m: usize, t: usize) -> Result<EuclidSplit> {
        let s = Self::of(n as i64 - t as i64 + 1, m);
        if s.q < 1 {
            return param(format!("n={n} too small for the colon split with m={m}, t={t}"));
        }
        Ok(s)
    }
}

/// The value of the piecewise depth formula together with its case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaValue {
    pub value: i64,
    pub branch: Branch,
    /// Present on the generic branch: the split of `n - t + 2` used there.
    pub split: Option<EuclidSplit>,
}

/// `n - t + 2 - ⌊(n-t+2)/(m+1)⌋ - ⌈(n-t+2)/(m+1)⌉` when `t <= n+1-m`,
/// otherwise `m - 1`.
pub fn phi(n: usize, m: usize, t: usize) -> Result<FormulaValue> {
    PathParams::new(n, m, t)?;
    let branch = Branch::of(n, m, t);
    Ok(match branch {
        Branch::Generic => {
            let split = EuclidSplit::depth_form(n, m, t);
            let s = split.dividend;
            let d = m as i64 + 1;
            FormulaValue {
                value: s - floor_div(s, d) - ceil_div(s, d),
                branch,
                split: Some(split),
            }
        }
        Branch::Saturated => FormulaValue {
            value: m as i64 - 1,
            branch,
            split: None,
        },
    })
}

/// Projective dimension of `S/I_{n,m}^t`, evaluated from its own case split
/// rather than as `n - phi`.
pub fn pd_formula(n: usize, m: usize, t: usize) -> Result<i64> {
    PathParams::new(n, m, t)?;
    let (n, m, t) = (n as i64, m as i64, t as i64);
    Ok(if t <= n + 1 - m {
        let s = n - t + 2;
        t - 2 + floor_div(s, m + 1) + ceil_div(s, m + 1)
    } else {
        n - m + 1
    })
}

/// `depth(I_{n,m}^t)`: `n - t + 3 - ⌊..⌋ - ⌈..⌉` or `m`.
pub fn ideal_depth_formula(n: usize, m: usize, t: usize) -> Result<i64> {
    PathParams::new(n, m, t)?;
    let (n, m, t) = (n as i64, m as i64, t as i64);
    Ok(if t <= n + 1 - m {
        let s = n - t + 2;
        n - t + 3 - floor_div(s, m + 1) - ceil_div(s, m + 1)
    } else {
        m
    })
}

/// `n + 1 - ⌊(n+1)/(m+1)⌋ - ⌈(n+1)/(m+1)⌉`, the `t = 1` value.
pub fn quotient_depth_t1(n: usize, m: usize) -> Result<i64> {
    PathParams::new(n, m, 1)?;
    let (n, m) = (n as i64, m as i64);
    Ok(n + 1 - floor_div(n + 1, m + 1) - ceil_div(n + 1, m + 1))
}

/// Upper bounds on Stanley depth for `I_{n,m}^t` and its quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SdepthBounds {
    /// `min{ n+1-⌊(n-t+1)/(m+1)⌋, n-⌊(⌈t/m⌉+1)/2⌋ }` bounding `sdepth(I^t)`.
    pub ideal_upper: i64,
    /// `phi(n,m,1)` bounding `sdepth(S/I^t)`.
    pub quotient_upper: i64,
    /// `phi(n,m,t) + t - ⌈t/m⌉`, never better than `quotient_upper`.
    pub remark_upper: i64,
}

pub fn sdepth_upper_bounds(n: usize, m: usize, t: usize) -> Result<SdepthBounds> {
    let phi_t = phi(n, m, t)?.value;
    let phi_1 = phi(n, m, 1)?.value;
    let (ni, mi, ti) = (n as i64, m as i64, t as i64);
    let ct = ceil_div(ti, mi);
    let first = ni + 1 - floor_div(ni - ti + 1, mi + 1);
    let second = ni - floor_div(ct + 1, 2);
    Ok(SdepthBounds {
        ideal_upper: first.min(second),
        quotient_upper: phi_1,
        remark_upper: phi_t + ti - ct,
    })
}

/// The four numeric claims about `U_{m,t}` in `m + t` variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UBounds {
    pub depth: i64,
    pub quotient_lower: i64,
    pub quotient_upper: i64,
    pub ideal_upper: i64,
    pub ideal_lower: i64,
}

pub fn u_lemma_bounds(m: usize, t: usize) -> Result<UBounds> {
    if m < 2 || t < 2 {
        return param(format!("U_{{m,t}} needs m, t >= 2, got m={m}, t={t}"));
    }
    let (m, t) = (m as i64, t as i64);
    let a = ceil_div(t, m);
    Ok(UBounds {
        depth: m - 1,
        quotient_lower: m - 1,
        quotient_upper: t + m - 1 - a,
        ideal_upper: t + m - floor_div(a + 1, 2),
        ideal_lower: t + m - (t + m - m * a) * floor_div(a + 1, 2) - (m * a - t) * floor_div(a, 2),
    })
}

/// `max{ ⌈(n+t-1)/3⌉, 1 }`, a conjectured value for `sdepth(S/I_{n,2}^t)`.
pub fn stefan_formula(n: usize, t: usize) -> i64 {
    ceil_div(n as i64 + t as i64 - 1, 3).max(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_examples() {
        assert_eq!(phi(3, 2, 1).unwrap().value, 1);
        for n in 1..=12 {
            for t in 1..=n {
                assert_eq!(phi(n, 1, t).unwrap().value, 0);
            }
            for t in 2..=6 {
                let f = phi(n, n, t).unwrap();
                assert_eq!(f.value, n as i64 - 1);
                assert_eq!(f.branch, Branch::Saturated);
            }
        }
        assert!(phi(2, 3, 1).is_err());
        assert!(phi(3, 2, 0).is_err());
    }

    #[test]
    fn pd_examples() {
        assert_eq!(pd_formula(3, 2, 1).unwrap(), 2);
        assert_eq!(pd_formula(5, 5, 2).unwrap(), 1);
        assert_eq!(pd_formula(6, 3, 5).unwrap(), 4);
    }

    #[test]
    fn phi_plus_pd_is_n() {
        for n in 1..=30 {
            for m in 1..=n {
                for t in 1..=30 {
                    let f = phi(n, m, t).unwrap().value;
                    assert_eq!(f + pd_formula(n, m, t).unwrap(), n as i64, "{n} {m} {t}");
                    assert_eq!(ideal_depth_formula(n, m, t).unwrap(), f + 1);
                }
                assert_eq!(phi(n, m, 1).unwrap().value, quotient_depth_t1(n, m).unwrap());
            }
        }
    }

    #[test]
    fn phi_shift_invariance() {
        for n in 2..=30 {
            for m in 1..n {
                for t in 2..=30 {
                    if t - 1 <= n - m {
                        assert_eq!(
                            phi(n - 1, m, t - 1).unwrap().value,
                            phi(n, m, t).unwrap().value,
                            "{n} {m} {t}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn generic_branch_in_terms_of_split() {
        // On the generic branch phi = (m-1) q + r - [r >= 1] where n-t+2 = (m+1) q + r.
        for n in 1..=25 {
            for m in 1..=n {
                for t in 1..=n + 1 - m {
                    let f = phi(n, m, t).unwrap();
                    let s = f.split.unwrap();
                    let expect = (m as i64 - 1) * s.q + s.r - i64::from(s.r >= 1);
                    assert_eq!(f.value, expect);
                }
            }
        }
    }

    #[test]
    fn bounds_examples() {
        assert_eq!(sdepth_upper_bounds(3, 2, 1).unwrap().quotient_upper, 1);
        assert_eq!(sdepth_upper_bounds(8, 2, 2).unwrap().ideal_upper, 7);
        for n in 1..=20 {
            for m in 1..=n {
                for t in 1..=20 {
                    let b = sdepth_upper_bounds(n, m, t).unwrap();
                    assert!(b.remark_upper >= b.quotient_upper, "{n} {m} {t}");
                }
            }
        }
    }

    #[test]
    fn u_bounds_examples() {
        let b = u_lemma_bounds(2, 2).unwrap();
        assert_eq!((b.depth, b.quotient_lower, b.quotient_upper), (1, 1, 2));
        // a = 1, b = 2: upper 4 - 1 = 3, lower 4 - 2*1 - 0 = 2.
        assert_eq!((b.ideal_upper, b.ideal_lower), (3, 2));
        for m in 2..=6 {
            for t in 2..=12 {
                let b = u_lemma_bounds(m, t).unwrap();
                assert!(b.ideal_lower <= b.ideal_upper);
                assert!(b.quotient_lower <= b.quotient_upper);
            }
        }
    }

    #[test]
    fn stefan_values() {
        assert_eq!(stefan_formula(3, 1), 1);
        assert_eq!(stefan_formula(4, 1), 2);
        assert_eq!(stefan_formula(2, 1), 1);
        assert_eq!(stefan_formula(1, 1), 1);
    }

    #[test]
    fn splits() {
        let s = EuclidSplit::depth_form(8, 2, 2);
        assert_eq!((s.q, s.r), (2, 2));
        let c = EuclidSplit::colon_form(7, 2, 2).unwrap();
        assert_eq!((c.q, c.r), (2, 0));
        assert!(EuclidSplit::colon_form(3, 2, 2).is_err());
    }
}
