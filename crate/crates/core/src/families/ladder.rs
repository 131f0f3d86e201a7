//! Ideal identities from the colon/sum recursion on `I_{n,m}^t`.
//!
//! Every identity is returned as an [`IdentityPair`] whose two sides are
//! built along different routes: the left side by iterating colon and sum
//! operations starting from `I_{n,m}^t`, the right side from a closed form in
//! smaller path ideals placed on the first variables of the same ring.

use super::{p_ideal, path_ideal, path_ideal_in, u_ideal, w_monomials, WitnessParams};
use crate::error::{param, Result};
use crate::monomial::{ExponentVector, MonomialIdeal};

/// Two independently built ideals that are claimed to be equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityPair {
    pub name: String,
    pub left: MonomialIdeal,
    pub right: MonomialIdeal,
}

impl IdentityPair {
    pub fn holds(&self) -> bool {
        self.left == self.right
    }
}

fn block(n: usize, a: usize, b: usize) -> Result<ExponentVector> {
    ExponentVector::consecutive(n, a, b)
}

fn path_power_in(n: usize, len: usize, m: usize, t: usize) -> Result<MonomialIdeal> {
    path_ideal_in(n, len, m)?.power(t as u32)
}

/// `(I_{n,m}^t : x_{n-m+1} ... x_n) = I_{n,m}^{t-1}` for `t >= 2`.
pub fn colon_power(n: usize, m: usize, t: usize) -> Result<IdentityPair> {
    if t < 2 {
        return param("colon-power needs 1 <= m <= n and t >= 2");
    }
    let i = path_ideal(n, m)?;
    Ok(IdentityPair {
        name: format!("colon-power n={n} m={m} t={t}"),
        left: i.power(t as u32)?.colon(&block(n, n - m + 1, n)?)?,
        right: i.power(t as u32 - 1)?,
    })
}

/// `((I_{n,m}^t : x_{n-k+2} ... x_n), x_{n-m+1} ... x_{n-k+1})
///  = (I_{n-k,m}^t, x_{n-m+1} ... x_{n-k+1})` for `2 <= k <= m`, `t >= 2`.
pub fn truncation(n: usize, m: usize, k: usize, t: usize) -> Result<IdentityPair> {
    if m > n || k < 2 || k > m || t < 2 {
        return param("truncation needs 1 <= m <= n, 2 <= k <= m and t >= 2");
    }
    let tail = block(n, n - m + 1, n - k + 1)?;
    let left = path_ideal(n, m)?
        .power(t as u32)?
        .colon(&block(n, n - k + 2, n)?)?
        .add_monomial(&tail)?;
    let right = path_power_in(n, n - k, m, t)?.add_monomial(&tail)?;
    Ok(IdentityPair {
        name: format!("truncation n={n} m={m} k={k} t={t}"),
        left,
        right,
    })
}

/// All identities along the recursion for `n >= 2m`, `t >= 2`:
///
/// * `U_j = (L_{j-1}, x_{n-m+j})` against its closed form, `1 <= j <= m`,
///   where `L_0 = I^t` and `L_j = (L_{j-1} : x_{n-m+j})`;
/// * `L_m = I^{t-1}`;
/// * for `2 <= j <= m` with `w_j = x_{n-2m+j} ... x_{n-m}`:
///   `A_{j,l}` for `0 <= l <= m-j`, `B_{j,l}` for `1 <= l <= m-j`, and
///   `(U_j : w_j) = (I_{n-m+j-1,m}^{t-1}, x_{n-m+j})`.
pub fn proof_ladder(n: usize, m: usize, t: usize) -> Result<Vec<IdentityPair>> {
    if m == 0 || n < 2 * m || t < 2 {
        return param("ladder needs m >= 1, n >= 2m and t >= 2");
    }
    let t32 = t as u32;
    let it = path_ideal(n, m)?.power(t32)?;
    let x = |i: usize| ExponentVector::var(n, i);
    let mut out = Vec::new();

    let mut l_prev = it.clone();
    let mut u = Vec::with_capacity(m + 1);
    u.push(MonomialIdeal::zero(n)); // unused slot so that u[j] = U_j
    for j in 1..=m {
        let xj = x(n - m + j)?;
        let u_j = l_prev.add_monomial(&xj)?;
        let closed = path_power_in(n, n - m + j - 1, m, t)?
            .colon(&block(n, n - m + 1, n - m + j - 1)?)?
            .add_monomial(&xj)?;
        out.push(IdentityPair {
            name: format!("U_{j} n={n} m={m} t={t}"),
            left: u_j.clone(),
            right: closed,
        });
        u.push(u_j);
        l_prev = l_prev.colon(&xj)?;
    }
    out.push(IdentityPair {
        name: format!("L_m n={n} m={m} t={t}"),
        left: l_prev,
        right: path_ideal(n, m)?.power(t32 - 1)?,
    });

    for j in 2..=m {
        let w_j = block(n, n - 2 * m + j, n - m)?;
        let x_top = x(n - m + j)?;

        let mut a_prev = u[j].add_monomial(&w_j)?;
        for l in 0..=m - j {
            if l > 0 {
                let xl = x(n - m - l + 1)?;
                let b_left = a_prev.add_monomial(&xl)?;
                let b_right = path_power_in(n, n - m - l, m, t)?
                    .add_monomial(&xl)?
                    .add_monomial(&x_top)?;
                out.push(IdentityPair {
                    name: format!("B_{{{j},{l}}} n={n} m={m} t={t}"),
                    left: b_left,
                    right: b_right,
                });
                a_prev = a_prev.colon(&xl)?;
            }
            let a_right = path_power_in(n, n - m - l - 1, m, t)?
                .add_monomial(&block(n, n - 2 * m + j, n - m - l)?)?
                .add_monomial(&x_top)?;
            out.push(IdentityPair {
                name: format!("A_{{{j},{l}}} n={n} m={m} t={t}"),
                left: a_prev.clone(),
                right: a_right,
            });
        }

        out.push(IdentityPair {
            name: format!("(U_{j}:w_{j}) n={n} m={m} t={t}"),
            left: u[j].colon(&w_j)?,
            right: path_power_in(n, n - m + j - 1, m, t - 1)?.add_monomial(&x_top)?,
        });
    }
    Ok(out)
}

/// `(I_{n,m}^t : w(m,t,q))` against `U_{m,t} + P_{m,t,q}`, plus
/// `(x_{n-m+1} ... x_n)` when `r = m`.
pub fn colon_w_identity(p: WitnessParams) -> Result<IdentityPair> {
    let n = p.n();
    let (m, t) = (p.m, p.t);
    let w = w_monomials(p)?;
    let left = path_ideal(n, m)?.power(t as u32)?.colon(&w.w)?;
    let mut right = u_ideal(m, t)?.extend(n - (m + t)).add(&p_ideal(p)?)?;
    if p.r == m {
        right = right.add_monomial(&block(n, n - m + 1, n)?)?;
    }
    Ok(IdentityPair {
        name: format!("colon-w m={m} t={t} q={} r={} (n={n})", p.q, p.r),
        left,
        right,
    })
}

/// `v (I : v) = (v) ∩ I`.
pub fn v_colon_identity(ideal: &MonomialIdeal, v: &ExponentVector) -> Result<IdentityPair> {
    Ok(IdentityPair {
        name: format!("vIv I={ideal} v={v}"),
        left: ideal.colon(v)?.scale(v)?,
        right: MonomialIdeal::principal(v.clone()).intersect(ideal)?,
    })
}
