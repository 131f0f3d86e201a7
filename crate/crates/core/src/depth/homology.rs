use super::complex::SimplicialComplex;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Coefficient field for homology.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Field {
    /// Characteristic 0, via exact integer elimination.
    #[default]
    Rational,
    /// GF(2).
    Char2,
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Field::Rational => "rational",
            Field::Char2 => "char2",
        })
    }
}

/// Reduced homology ranks `[H̃_{-1}, H̃_0, H̃_1, ...]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyRanks(pub Vec<usize>);

impl HomologyRanks {
    /// Rank of `H̃_i` for `i >= -1`.
    pub fn get(&self, i: isize) -> usize {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.0.get(k).copied())
            .unwrap_or(0)
    }

    /// Alternating sums of face counts and of homology ranks agree.
    pub fn euler_consistent(&self, complex: &SimplicialComplex) -> bool {
        let alt = |xs: &[usize]| -> i64 {
            xs.iter()
                .enumerate()
                .map(|(k, &x)| if k % 2 == 0 { -(x as i64) } else { x as i64 })
                .sum()
        };
        if complex.is_void() {
            return self.0.iter().all(|&r| r == 0);
        }
        alt(&complex.f_vector()) == alt(&self.0)
    }
}

fn faces_by_size(c: &SimplicialComplex) -> Vec<Vec<u32>> {
    let mut by: Vec<Vec<u32>> = vec![Vec::new(); c.vertices.len() + 1];
    for &f in &c.faces {
        by[f.count_ones() as usize].push(f);
    }
    by
}

/// Rank of the boundary map from faces of size `k` to faces of size `k - 1`.
pub fn boundary_rank(c: &SimplicialComplex, k: usize, field: Field) -> usize {
    let by = faces_by_size(c);
    boundary_rank_from(&by, k, field)
}

fn boundary_rank_from(by: &[Vec<u32>], k: usize, field: Field) -> usize {
    if k == 0 || k >= by.len() || by[k].is_empty() || by[k - 1].is_empty() {
        return 0;
    }
    let index: HashMap<u32, usize> = by[k - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let cols = by[k - 1].len();
    let rows: Vec<Vec<(usize, i64)>> = by[k]
        .iter()
        .map(|&face| {
            let mut out = Vec::with_capacity(k);
            let mut pos = 0;
            for b in 0..32 {
                if face & (1 << b) != 0 {
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    out.push((index[&(face & !(1 << b))], sign));
                    pos += 1;
                }
            }
            out
        })
        .collect();
    match field {
        Field::Char2 => rank_gf2(&rows, cols),
        Field::Rational => {
            let dense: Vec<Vec<i64>> = rows
                .iter()
                .map(|r| {
                    let mut v = vec![0i64; cols];
                    for &(j, s) in r {
                        v[j] = s;
                    }
                    v
                })
                .collect();
            rank_i64(dense.clone()).unwrap_or_else(|| rank_bigint(dense))
        }
    }
}

/// Ranks of reduced homology over `field`.
pub fn reduced_homology_ranks(c: &SimplicialComplex, field: Field) -> HomologyRanks {
    if c.is_void() {
        return HomologyRanks(vec![0]);
    }
    let by = faces_by_size(c);
    let top = by.iter().rposition(|v| !v.is_empty()).unwrap_or(0);
    let ranks: Vec<usize> = (0..=top + 1).map(|k| boundary_rank_from(&by, k, field)).collect();
    // H̃_{k-1} lives on faces of size k.
    HomologyRanks(
        (0..=top)
            .map(|k| by[k].len() - ranks[k] - ranks[k + 1])
            .collect(),
    )
}

fn rank_gf2(rows: &[Vec<(usize, i64)>], cols: usize) -> usize {
    let words = cols.div_ceil(64);
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            let mut v = vec![0u64; words];
            for &(j, _) in r {
                v[j / 64] ^= 1 << (j % 64);
            }
            v
        })
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let (w, bit) = (col / 64, 1u64 << (col % 64));
        let Some(p) = (rank..m.len()).find(|&i| m[i][w] & bit != 0) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && row[w] & bit != 0 {
                for (a, b) in row.iter_mut().zip(&pivot) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd_normalize(row: &mut [i64]) {
    let g = row.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g > 1 {
        row.iter_mut().for_each(|x| *x /= g);
    }
}

/// Fraction-free row elimination over Z with each row divided by its content
/// after every update. Returns `None` on `i64` overflow.
fn rank_i64(mut m: Vec<Vec<i64>>) -> Option<usize> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let pick = (rank..m.len())
            .filter(|&i| m[i][col] != 0)
            .min_by_key(|&i| m[i][col].unsigned_abs());
        let Some(p) = pick else { continue };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        let pv = pivot[col];
        for row in m.iter_mut().skip(rank + 1) {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for (a, &b) in row.iter_mut().zip(&pivot) {
                *a = a.checked_mul(pv)?.checked_sub(b.checked_mul(f)?)?;
            }
            gcd_normalize(row);
        }
        rank += 1;
    }
    Some(rank)
}

fn rank_bigint(m: Vec<Vec<i64>>) -> usize {
    let mut m: Vec<Vec<BigInt>> = m
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let pick = (rank..m.len())
            .filter(|&i| !m[i][col].is_zero())
            .min_by(|&i, &j| m[i][col].abs().cmp(&m[j][col].abs()));
        let Some(p) = pick else { continue };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        let pv = pivot[col].clone();
        for row in m.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (a, b) in row.iter_mut().zip(&pivot) {
                *a = &*a * &pv - b * &f;
            }
            let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if g > BigInt::from(1) {
                row.iter_mut().for_each(|x| *x = &*x / &g);
            }
        }
        rank += 1;
    }
    rank
}
