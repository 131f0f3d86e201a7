use super::complex::{upper_koszul, DEFAULT_MAX_VERTICES};
use super::homology::{reduced_homology_ranks, Field};
use crate::error::{Error, Result};
use crate::monomial::{lcm_lattice, ExponentVector, MonomialIdeal, DEFAULT_MAX_GENS, DEFAULT_MAX_LATTICE};
use crate::par;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiOptions {
    pub field: Field,
    pub max_gens: usize,
    pub max_lattice: usize,
    pub max_vertices: usize,
    /// Spread lattice degrees over the rayon pool (no effect without the
    /// `parallel` feature).
    pub parallel: bool,
}

impl Default for BettiOptions {
    fn default() -> Self {
        BettiOptions {
            field: Field::Rational,
            max_gens: DEFAULT_MAX_GENS,
            max_lattice: DEFAULT_MAX_LATTICE,
            max_vertices: DEFAULT_MAX_VERTICES,
            parallel: true,
        }
    }
}

/// One nonzero `β_{i,a}(S/I)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiRow {
    pub i: usize,
    pub degree: ExponentVector,
    pub rank: usize,
}

/// Nonzero multigraded Betti numbers of `S/I` for `i >= 1`, sorted by
/// `(i, degree)`. `β_{0,0} = 1` is implicit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub n: usize,
    pub field: Field,
    pub module: String,
    pub rows: Vec<BettiRow>,
    /// Number of upper Koszul complexes whose homology passed the Euler check.
    #[serde(skip)]
    pub complexes_checked: usize,
}

impl BettiTable {
    pub fn pd(&self) -> usize {
        self.rows.iter().map(|r| r.i).max().unwrap_or(0)
    }

    pub fn depth(&self) -> usize {
        self.n - self.pd()
    }

    /// Total Betti numbers `β_0, β_1, ..., β_pd`.
    pub fn totals(&self) -> Vec<usize> {
        let mut t = vec![0usize; self.pd() + 1];
        t[0] = 1;
        for r in &self.rows {
            t[r.i] += r.rank;
        }
        t
    }

    /// Tab-separated `i`, degree, rank, one row per line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            let deg: Vec<String> = r.degree.exps().iter().map(|e| e.to_string()).collect();
            s.push_str(&format!("{}\t{}\t{}\n", r.i, deg.join(","), r.rank));
        }
        s
    }
}

/// `β_{i,a}(S/I) = dim H̃_{i-2}(K^a(I))` for `a` in the lcm lattice.
pub fn betti_table(ideal: &MonomialIdeal, opts: &BettiOptions) -> Result<BettiTable> {
    if ideal.is_unit() {
        return Err(Error::Domain("S/I is zero for the unit ideal".into()));
    }
    let lattice = lcm_lattice(ideal, opts.max_gens, opts.max_lattice)?;
    let per_degree = par::map(&lattice, opts.parallel, |a| -> Result<Vec<BettiRow>> {
        let k = upper_koszul(ideal, a, opts.max_vertices)?;
        let h = reduced_homology_ranks(&k, opts.field);
        if !h.euler_consistent(&k) {
            return Err(Error::Internal(format!("Euler check failed at degree {a}")));
        }
        Ok(h
            .0
            .iter()
            .enumerate()
            .filter(|(_, &r)| r > 0)
            .map(|(idx, &rank)| BettiRow {
                i: idx + 1, // H̃_{idx-1} gives homological degree idx + 1
                degree: a.clone(),
                rank,
            })
            .collect())
    });
    let checked = per_degree.len();
    let mut rows = Vec::new();
    for r in per_degree {
        rows.extend(r?);
    }
    rows.sort_by(|x, y| (x.i, &x.degree).cmp(&(y.i, &y.degree)));
    Ok(BettiTable {
        n: ideal.n(),
        field: opts.field,
        module: "S/I".into(),
        rows,
        complexes_checked: checked,
    })
}

fn proper_nonzero(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::Domain("ideal is zero".into()));
    }
    if ideal.is_unit() {
        return Err(Error::Domain("ideal is the unit ideal".into()));
    }
    Ok(())
}

pub fn pd_quotient(ideal: &MonomialIdeal, opts: &BettiOptions) -> Result<usize> {
    proper_nonzero(ideal)?;
    Ok(betti_table(ideal, opts)?.pd())
}

/// `depth(S/I) = n - pd(S/I)`.
pub fn depth_quotient(ideal: &MonomialIdeal, opts: &BettiOptions) -> Result<usize> {
    proper_nonzero(ideal)?;
    Ok(betti_table(ideal, opts)?.depth())
}

/// `depth(I) = depth(S/I) + 1`.
pub fn depth_ideal(ideal: &MonomialIdeal, opts: &BettiOptions) -> Result<usize> {
    Ok(depth_quotient(ideal, opts)? + 1)
}
