use super::ExponentVector;
use crate::error::{param, Error, Result};
use std::fmt;

/// A monomial ideal of `K[x_1, ..., x_n]`, stored as its minimal generating
/// set `G(I)` sorted lexicographically. Two ideals are equal exactly when
/// their canonical forms are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Reduces `raw` to its divisibility antichain in canonical order.
    pub fn minimalize(n: usize, raw: impl IntoIterator<Item = ExponentVector>) -> Result<Self> {
        if n == 0 {
            return param("ring must have at least one variable");
        }
        let mut cand: Vec<ExponentVector> = Vec::new();
        for g in raw {
            g.check_len(n)?;
            cand.push(g);
        }
        // Sorting by degree first means a divisor is always seen before its multiples.
        cand.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        cand.dedup();
        let mut kept: Vec<ExponentVector> = Vec::with_capacity(cand.len());
        for g in cand {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        kept.sort();
        Ok(MonomialIdeal { n, gens: kept })
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![ExponentVector::one(n)],
        }
    }

    pub fn principal(u: ExponentVector) -> Self {
        MonomialIdeal { n: u.n(), gens: vec![u] }
    }

    /// The ideal generated by the given 1-based variables.
    pub fn variables(n: usize, vars: impl IntoIterator<Item = usize>) -> Result<Self> {
        let gens = vars
            .into_iter()
            .map(|i| ExponentVector::var(n, i))
            .collect::<Result<Vec<_>>>()?;
        Self::minimalize(n, gens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.exps().iter().all(|&e| e <= 1))
    }

    pub fn contains(&self, u: &ExponentVector) -> Result<bool> {
        u.check_len(self.n)?;
        Ok(self.contains_unchecked(u.exps()))
    }

    /// Membership on a raw exponent slice of the right length.
    pub(crate) fn contains_unchecked(&self, u: &[u32]) -> bool {
        self.gens
            .iter()
            .any(|g| g.exps().iter().zip(u).all(|(a, b)| a <= b))
    }

    /// `J ⊆ I`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_ring(other)?;
        Ok(other.gens.iter().all(|g| self.contains_unchecked(g.exps())))
    }

    fn check_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check_ring(other)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                raw.push(a.mul(b)?);
            }
        }
        Self::minimalize(self.n, raw)
    }

    pub fn power(&self, t: u32) -> Result<Self> {
        if t == 0 {
            return param("power exponent t must be at least 1");
        }
        let mut acc = self.clone();
        for _ in 1..t {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// `(I : u) = { v : v u ∈ I }`.
    pub fn colon(&self, u: &ExponentVector) -> Result<Self> {
        u.check_len(self.n)?;
        let raw = self
            .gens
            .iter()
            .map(|g| g.quotient(u))
            .collect::<Result<Vec<_>>>()?;
        Self::minimalize(self.n, raw)
    }

    /// `I + J`.
    pub fn add(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check_ring(other)?;
        Self::minimalize(self.n, self.gens.iter().chain(&other.gens).cloned())
    }

    /// `I + (u)`.
    pub fn add_monomial(&self, u: &ExponentVector) -> Result<Self> {
        u.check_len(self.n)?;
        Self::minimalize(self.n, self.gens.iter().cloned().chain(Some(u.clone())))
    }

    /// `I ∩ J`, generated by the pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check_ring(other)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                raw.push(a.lcm(b)?);
            }
        }
        Self::minimalize(self.n, raw)
    }

    /// `u · I`.
    pub fn scale(&self, u: &ExponentVector) -> Result<Self> {
        u.check_len(self.n)?;
        let raw = self.gens.iter().map(|g| g.mul(u)).collect::<Result<Vec<_>>>()?;
        Self::minimalize(self.n, raw)
    }

    /// `I S'` for `S' = S[x_{n+1}, ..., x_{n+extra}]`.
    pub fn extend(&self, extra: usize) -> Self {
        MonomialIdeal {
            n: self.n + extra,
            gens: self.gens.iter().map(|g| g.extend(extra)).collect(),
        }
    }

    /// Componentwise max over the generators (the all-zero vector for `0`).
    pub fn lcm_of_gens(&self) -> ExponentVector {
        let mut e = vec![0u32; self.n];
        for g in &self.gens {
            for (m, &x) in e.iter_mut().zip(g.exps()) {
                *m = (*m).max(x);
            }
        }
        ExponentVector(e)
    }

    /// Union of the supports of the generators, 1-based.
    pub fn support(&self) -> Vec<usize> {
        self.lcm_of_gens().support()
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}
