//! Monomials as exponent vectors and monomial ideals in canonical form.

mod ideal;
mod lattice;
pub mod text;

pub use ideal::MonomialIdeal;
pub use lattice::{lcm_lattice, DEFAULT_MAX_GENS, DEFAULT_MAX_LATTICE};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Largest exponent we accept (31-bit nonnegative).
pub const MAX_EXPONENT: u32 = (1 << 31) - 1;

/// A monomial `x_1^{c_1} ... x_n^{c_n}`, equivalently a multidegree in N^n.
///
/// The derived `Ord` is the lexicographic order on exponent sequences; the
/// divisibility order is [`ExponentVector::divides`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct ExponentVector(Vec<u32>);

impl TryFrom<Vec<u32>> for ExponentVector {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        ExponentVector::new(v)
    }
}

impl From<ExponentVector> for Vec<u32> {
    fn from(v: ExponentVector) -> Self {
        v.0
    }
}

impl ExponentVector {
    /// Skips validation; callers guarantee a nonempty vector of small exponents.
    pub(crate) fn from_raw(exps: Vec<u32>) -> Self {
        ExponentVector(exps)
    }

    pub fn new(exps: Vec<u32>) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::Parameter("ring must have at least one variable".into()));
        }
        if exps.iter().any(|&e| e > MAX_EXPONENT) {
            return Err(Error::Overflow);
        }
        Ok(ExponentVector(exps))
    }

    /// The unit monomial 1 in `n` variables.
    pub fn one(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// The variable `x_i` (1-based) in `n` variables.
    pub fn var(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::Parameter(format!("variable x{i} outside x1..x{n}")));
        }
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Ok(ExponentVector(e))
    }

    /// The squarefree product of the given 1-based variables.
    pub fn squarefree(n: usize, vars: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut e = vec![0; n];
        for i in vars {
            if i == 0 || i > n {
                return Err(Error::Parameter(format!("variable x{i} outside x1..x{n}")));
            }
            e[i - 1] = 1;
        }
        Ok(ExponentVector(e))
    }

    /// Product `x_a x_{a+1} ... x_b` (1-based, inclusive); `1` when `a > b`.
    pub fn consecutive(n: usize, a: usize, b: usize) -> Result<Self> {
        Self::squarefree(n, a..=b)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// 1-based indices of the variables dividing this monomial.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.0.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: self.0.len(),
            });
        }
        Ok(())
    }

    /// Componentwise `self <= other`, i.e. `self` divides `other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        other.check_len(self.n())?;
        let exps = self
            .0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_add(b).filter(|&s| s <= MAX_EXPONENT).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExponentVector(exps))
    }

    /// Componentwise max.
    pub fn lcm(&self, other: &Self) -> Result<Self> {
        other.check_len(self.n())?;
        Ok(ExponentVector(
            self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect(),
        ))
    }

    /// Componentwise `max(self - other, 0)`: the generator of `(x^self) : x^other`.
    pub fn quotient(&self, other: &Self) -> Result<Self> {
        other.check_len(self.n())?;
        Ok(ExponentVector(
            self.0.iter().zip(&other.0).map(|(&a, &b)| a.saturating_sub(b)).collect(),
        ))
    }

    /// Same monomial in a ring with `extra` more variables appended.
    pub fn extend(&self, extra: usize) -> Self {
        let mut e = self.0.clone();
        e.resize(self.0.len() + extra, 0);
        ExponentVector(e)
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", text::format_monomial(self))
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", text::format_monomial(self))
    }
}
