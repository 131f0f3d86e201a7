//! The path-ideal families, their witness monomials and closed-form values.

pub mod formulas;
pub mod ladder;

pub use formulas::{
    ideal_depth_formula, pd_formula, phi, quotient_depth_t1, sdepth_upper_bounds, stefan_formula,
    u_lemma_bounds, Branch, EuclidSplit, FormulaValue, SdepthBounds, UBounds,
};
pub use ladder::{
    colon_power, colon_w_identity, proof_ladder, truncation, v_colon_identity, IdentityPair,
};

use crate::error::{param, Result};
use crate::monomial::{ExponentVector, MonomialIdeal};

/// The triple `(n, m, t)`: ring size, path length and power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathParams {
    pub n: usize,
    pub m: usize,
    pub t: usize,
}

impl PathParams {
    pub fn new(n: usize, m: usize, t: usize) -> Result<Self> {
        if m == 0 || m > n {
            return param(format!("need 1 <= m <= n, got n={n}, m={m}"));
        }
        if t == 0 {
            return param("need t >= 1");
        }
        Ok(PathParams { n, m, t })
    }

    /// `I_{n,m}^t`.
    pub fn ideal(&self) -> Result<MonomialIdeal> {
        path_ideal(self.n, self.m)?.power(self.t as u32)
    }
}

/// `I_{n,m} = (x_1 ... x_m, x_2 ... x_{m+1}, ..., x_{n-m+1} ... x_n)`.
pub fn path_ideal(n: usize, m: usize) -> Result<MonomialIdeal> {
    if m == 0 || m > n {
        return param(format!("path ideal needs 1 <= m <= n, got n={n}, m={m}"));
    }
    path_ideal_in(n, n, m)
}

/// `I_{len,m}` placed on the first `len` variables of a ring with `ambient`
/// variables. When `len < m` there are no paths and this is the zero ideal.
pub fn path_ideal_in(ambient: usize, len: usize, m: usize) -> Result<MonomialIdeal> {
    if m == 0 || len > ambient {
        return param(format!("cannot place I_{{{len},{m}}} in {ambient} variables"));
    }
    let gens = (1..=(len + 1).saturating_sub(m))
        .map(|i| ExponentVector::consecutive(ambient, i, i + m - 1))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::minimalize(ambient, gens)
}

/// The cofactor of `I_{n,m}` after pulling out `x_{n-m+1} ... x_m`, valid for
/// `m <= n <= 2m - 1`. Generators are listed directly:
/// `x_i ... x_{n-m} · x_{m+1} ... x_{i+m-1}` for `1 <= i <= n-m+1`.
pub fn tilde_path_ideal(n: usize, m: usize) -> Result<MonomialIdeal> {
    if m == 0 || n < m || n + 1 > 2 * m {
        return param(format!("tilde path ideal needs m <= n <= 2m-1, got n={n}, m={m}"));
    }
    let gens = (1..=n - m + 1)
        .map(|i| ExponentVector::squarefree(n, (i..=n - m).chain(m + 1..=i + m - 1)))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::minimalize(n, gens)
}

/// The common factor `x_{n-m+1} ... x_m` of the generators of `I_{n,m}`.
pub fn tilde_factor(n: usize, m: usize) -> Result<ExponentVector> {
    if m == 0 || n < m || n + 1 > 2 * m {
        return param(format!("tilde factor needs m <= n <= 2m-1, got n={n}, m={m}"));
    }
    ExponentVector::consecutive(n, n - m + 1, m)
}

/// Residue class of `j` modulo `m` inside `1..=len`, with `m` standing for
/// residue 0.
fn residue_class(len: usize, m: usize, j: usize) -> Vec<usize> {
    (j..=len).step_by(m).collect()
}

/// `U_{m,t}` in `K[x_1, ..., x_{m+t}]`: products `x_{i_1} ... x_{i_m}` with
/// `i_j ≡ j (mod m)`, one index drawn from each residue class. Residue
/// classes use representatives `1..=m`. Distinct residues make the indices
/// distinct, so every generator is squarefree of degree `m`; each selection
/// is generated once regardless of index order.
pub fn u_ideal(m: usize, t: usize) -> Result<MonomialIdeal> {
    if m < 2 || t < 2 {
        return param(format!("U_{{m,t}} needs m, t >= 2, got m={m}, t={t}"));
    }
    let n = m + t;
    let classes: Vec<Vec<usize>> = (1..=m).map(|j| residue_class(n, m, j)).collect();
    let mut picks: Vec<Vec<usize>> = vec![Vec::new()];
    for class in &classes {
        picks = picks
            .into_iter()
            .flat_map(|p| {
                class.iter().map(move |&i| {
                    let mut q = p.clone();
                    q.push(i);
                    q
                })
            })
            .collect();
    }
    let gens = picks
        .into_iter()
        .map(|p| ExponentVector::squarefree(n, p))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::minimalize(n, gens)
}

/// `(a, b)` with `m + t = m a + b` and `1 <= b <= m`.
pub fn u_split(m: usize, t: usize) -> (usize, usize) {
    let s = m + t;
    let a = (s - 1) / m;
    (a, s - m * a)
}

/// `V_{m,j,k} = (x_j, x_{j+m}, ..., x_{j+(k-1)m})` in `n` variables.
pub fn v_ideal(n: usize, m: usize, j: usize, k: usize) -> Result<MonomialIdeal> {
    if m == 0 || j == 0 || k == 0 {
        return param("V_{m,j,k} needs m, j, k >= 1");
    }
    let last = j + (k - 1) * m;
    if last > n {
        return param(format!("V_{{{m},{j},{k}}} reaches x{last}, beyond x{n}"));
    }
    MonomialIdeal::variables(n, (0..k).map(|s| j + s * m))
}

/// The intersection of `V_{m,1,a+1}, ..., V_{m,b,a+1}, V_{m,b+1,a}, ..., V_{m,m,a}`
/// where `m + t = m a + b`, `1 <= b <= m`.
pub fn u_ideal_as_intersection(m: usize, t: usize) -> Result<MonomialIdeal> {
    if m < 2 || t < 2 {
        return param(format!("U_{{m,t}} needs m, t >= 2, got m={m}, t={t}"));
    }
    let n = m + t;
    let (a, b) = u_split(m, t);
    let mut acc = MonomialIdeal::unit(n);
    for j in 1..=m {
        let k = if j <= b { a + 1 } else { a };
        acc = acc.intersect(&v_ideal(n, m, j, k)?)?;
    }
    Ok(acc)
}

/// Parameters `(m, t, q, r)` of the colon-by-`w` construction, with
/// `n = (m+1) q + t - 1 + r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessParams {
    pub m: usize,
    pub t: usize,
    pub q: usize,
    pub r: usize,
}

impl WitnessParams {
    pub fn new(m: usize, t: usize, q: usize, r: usize) -> Result<Self> {
        if m < 2 || t < 2 || q < 1 || r > m {
            return param(format!(
                "need q >= 1, t, m >= 2, 0 <= r <= m; got m={m}, t={t}, q={q}, r={r}"
            ));
        }
        Ok(WitnessParams { m, t, q, r })
    }

    /// Recovers `(q, r)` from `n` via `n - t + 1 = (m+1) q + r`.
    pub fn from_ring(n: usize, m: usize, t: usize) -> Result<Self> {
        let split = EuclidSplit::colon_form(n, m, t)?;
        Self::new(m, t, split.q as usize, split.r as usize)
    }

    pub fn n(&self) -> usize {
        (self.m + 1) * self.q + self.t - 1 + self.r
    }
}

/// `w(m,t)`, `v(m,t,q)` and their product `w(m,t,q)`, all in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessMonomials {
    pub w_mt: ExponentVector,
    pub v: ExponentVector,
    pub w: ExponentVector,
}

pub fn w_monomials(p: WitnessParams) -> Result<WitnessMonomials> {
    let (m, t, q) = (p.m, p.t, p.q);
    let n = p.n();
    // w(m,t) = (x_2 ... x_{m+1})(x_3 ... x_{m+2}) ... (x_t ... x_{t+m-1})
    let mut w_mt = ExponentVector::one(n);
    for s in 2..=t {
        w_mt = w_mt.mul(&ExponentVector::consecutive(n, s, s + m - 1)?)?;
    }
    let mut v = ExponentVector::one(n);
    for l in 1..q {
        let base = t + l * (m + 1);
        v = v.mul(&ExponentVector::consecutive(n, base + 1, base + m - 1)?)?;
    }
    let w = w_mt.mul(&v)?;
    Ok(WitnessMonomials { w_mt, v, w })
}

/// `P_{m,t,q} = (x_{t+l(m+1)} : 1 <= l <= q-1) + (x_{t+l(m+1)+m} : 1 <= l <= q-1)`.
pub fn p_ideal(p: WitnessParams) -> Result<MonomialIdeal> {
    let (m, t, q) = (p.m, p.t, p.q);
    let vars = (1..q).flat_map(|l| {
        let base = t + l * (m + 1);
        [base, base + m]
    });
    MonomialIdeal::variables(p.n(), vars)
}

/// `P_{m,t,q}` as `{x_{t+m+1}, ..., x_{n-r}} \ supp(v(m,t,q))`.
pub fn p_ideal_by_support(p: WitnessParams) -> Result<MonomialIdeal> {
    let n = p.n();
    let v = w_monomials(p)?.v;
    let supp = v.support();
    MonomialIdeal::variables(
        n,
        (p.t + p.m + 1..=n - p.r).filter(|i| !supp.contains(i)),
    )
}
