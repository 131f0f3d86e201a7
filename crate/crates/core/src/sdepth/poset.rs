use crate::error::{param, Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal};
use serde::{Deserialize, Serialize};
use std::fmt;

pub const DEFAULT_MAX_POSET: usize = 2_000_000;

const ABSENT: u32 = u32::MAX;

/// Which module the poset describes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `S/I`: exponents not in `I`.
    #[default]
    Quotient,
    /// `I`: exponents in `I`.
    Ideal,
    /// `I/J`: exponents in `I` but not in `J`.
    Pair,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Quotient => "quotient",
            Mode::Ideal => "ideal",
            Mode::Pair => "pair",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quotient" => Ok(Mode::Quotient),
            "ideal" => Ok(Mode::Ideal),
            "pair" => Ok(Mode::Pair),
            _ => param(format!("unknown mode {s:?}")),
        }
    }
}

/// Characteristic poset: the exponents `c <= g` that belong to the module,
/// in lex order.
#[derive(Clone, Debug)]
pub struct CharPoset {
    g: ExponentVector,
    mode: Mode,
    elements: Vec<ExponentVector>,
    // box index -> position in `elements`
    lookup: Vec<u32>,
    strides: Vec<usize>,
}

fn box_size(g: &[u32]) -> Option<usize> {
    g.iter()
        .try_fold(1usize, |acc, &e| acc.checked_mul(e as usize + 1))
}

fn member(mode: Mode, i: &MonomialIdeal, j: Option<&MonomialIdeal>, c: &[u32]) -> bool {
    match mode {
        Mode::Quotient => !i.contains_unchecked(c),
        Mode::Ideal => i.contains_unchecked(c),
        Mode::Pair => i.contains_unchecked(c) && !j.is_some_and(|j| j.contains_unchecked(c)),
    }
}

/// Default bounding degree: componentwise max over the generators of both ideals.
pub fn default_g(i: &MonomialIdeal, j: Option<&MonomialIdeal>) -> ExponentVector {
    let gi = i.lcm_of_gens();
    match j {
        Some(j) => gi.lcm(&j.lcm_of_gens()).unwrap_or(gi),
        None => gi,
    }
}

pub fn build_poset(
    i: &MonomialIdeal,
    j: Option<&MonomialIdeal>,
    mode: Mode,
    g_override: Option<&ExponentVector>,
    cap: usize,
) -> Result<CharPoset> {
    let n = i.n();
    match (mode, j) {
        (Mode::Pair, None) => return param("pair mode needs a second ideal"),
        (Mode::Pair, Some(j)) => {
            if j.n() != n {
                return Err(Error::LengthMismatch { expected: n, found: j.n() });
            }
            if !i.contains_ideal(j)? {
                return Err(Error::Domain("J is not contained in I".into()));
            }
        }
        (_, Some(_)) => return param("a second ideal is only used in pair mode"),
        _ => {}
    }
    let base = default_g(i, j);
    let g = match g_override {
        Some(g) => {
            g.check_len(n)?;
            if !base.divides(g) {
                return param(format!("g = {g} must be a multiple of {base}"));
            }
            g.clone()
        }
        None => base,
    };
    let size = box_size(g.exps()).unwrap_or(usize::MAX);
    if size > cap {
        return Err(Error::ResourceLimit { what: "poset box", actual: size, cap });
    }
    let mut strides = vec![1usize; n];
    for k in (0..n.saturating_sub(1)).rev() {
        strides[k] = strides[k + 1] * (g.exps()[k + 1] as usize + 1);
    }
    let mut lookup = vec![ABSENT; size];
    let mut elements = Vec::new();
    let mut c = vec![0u32; n];
    // odometer with the last coordinate fastest, so box order is lex order
    for slot in lookup.iter_mut() {
        if member(mode, i, j, &c) {
            *slot = elements.len() as u32;
            elements.push(ExponentVector::from_raw(c.clone()));
        }
        for k in (0..n).rev() {
            if c[k] < g.exps()[k] {
                c[k] += 1;
                break;
            }
            c[k] = 0;
        }
    }
    Ok(CharPoset { g, mode, elements, lookup, strides })
}

impl CharPoset {
    pub fn g(&self) -> &ExponentVector {
        &self.g
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn n(&self) -> usize {
        self.g.n()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in lex order.
    pub fn elements(&self) -> &[ExponentVector] {
        &self.elements
    }

    pub fn index_of(&self, c: &[u32]) -> Option<usize> {
        if c.len() != self.n() || c.iter().zip(self.g.exps()).any(|(a, b)| a > b) {
            return None;
        }
        let k: usize = c.iter().zip(&self.strides).map(|(&a, s)| a as usize * s).sum();
        match self.lookup[k] {
            ABSENT => None,
            p => Some(p as usize),
        }
    }

    pub fn contains(&self, c: &[u32]) -> bool {
        self.index_of(c).is_some()
    }

    /// Number of coordinates where `d` reaches `g`.
    pub fn rho(&self, d: &[u32]) -> usize {
        d.iter().zip(self.g.exps()).filter(|(a, b)| a == b).count()
    }

    /// Re-derive membership of every box point from the source ideals.
    pub fn recheck(&self, i: &MonomialIdeal, j: Option<&MonomialIdeal>) -> bool {
        if i.n() != self.n() {
            return false;
        }
        let size = self.lookup.len();
        let mut c = vec![0u32; self.n()];
        for k in 0..size {
            let expect = member(self.mode, i, j, &c);
            if expect != (self.lookup[k] != ABSENT) {
                return false;
            }
            for p in (0..c.len()).rev() {
                if c[p] < self.g.exps()[p] {
                    c[p] += 1;
                    break;
                }
                c[p] = 0;
            }
        }
        true
    }

    /// Smallest over all elements `e` of the largest `ρ(d)` with `d >= e` in
    /// the poset. No interval partition can beat it.
    pub fn rho_upper_bound(&self) -> usize {
        let n = self.n();
        let mut best = vec![0usize; self.len()];
        // reverse lex visits every upper cover first
        for p in (0..self.len()).rev() {
            let e = self.elements[p].exps();
            let mut v = self.rho(e);
            let mut up = e.to_vec();
            for k in 0..n {
                if up[k] < self.g.exps()[k] {
                    up[k] += 1;
                    if let Some(q) = self.index_of(&up) {
                        v = v.max(best[q]);
                    }
                    up[k] -= 1;
                }
            }
            best[p] = v;
        }
        best.into_iter().min().unwrap_or(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::path_ideal;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn path_3_2_quotient() {
        let p = build_poset(&path_ideal(3, 2).unwrap(), None, Mode::Quotient, None, DEFAULT_MAX_POSET).unwrap();
        let got: Vec<_> = p.elements().to_vec();
        let want = vec![ev(&[0, 0, 0]), ev(&[0, 0, 1]), ev(&[0, 1, 0]), ev(&[1, 0, 0]), ev(&[1, 0, 1])];
        assert_eq!(got, want);
        assert!(p.recheck(&path_ideal(3, 2).unwrap(), None));
        assert_eq!(p.rho(&[1, 0, 1]), 2);
        assert_eq!(p.rho_upper_bound(), 1);
    }

    #[test]
    fn principal_ideal_mode() {
        let i = MonomialIdeal::principal(ev(&[1, 1, 1, 1]));
        let p = build_poset(&i, None, Mode::Ideal, None, DEFAULT_MAX_POSET).unwrap();
        assert_eq!(p.elements(), &[ev(&[1, 1, 1, 1])]);
    }

    #[test]
    fn unit_quotient_is_empty() {
        let p = build_poset(&MonomialIdeal::unit(3), None, Mode::Quotient, None, 10).unwrap();
        assert!(p.is_empty());
    }

    #[test]
    fn zero_quotient_is_a_point() {
        let p = build_poset(&MonomialIdeal::zero(3), None, Mode::Quotient, None, 10).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.rho(p.elements()[0].exps()), 3);
    }

    #[test]
    fn cap_and_domain_errors() {
        let i = path_ideal(6, 2).unwrap().power(3).unwrap();
        assert!(matches!(
            build_poset(&i, None, Mode::Quotient, None, 100),
            Err(Error::ResourceLimit { .. })
        ));
        let a = path_ideal(4, 3).unwrap();
        let b = path_ideal(4, 2).unwrap();
        assert!(matches!(build_poset(&a, Some(&b), Mode::Pair, None, 100), Err(Error::Domain(_))));
        let p = build_poset(&b, Some(&a), Mode::Pair, None, 100).unwrap();
        assert!(p.recheck(&b, Some(&a)));
        assert!(p.elements().iter().all(|c| b.contains(c).unwrap() && !a.contains(c).unwrap()));
    }

    #[test]
    fn g_override_must_dominate() {
        let i = path_ideal(3, 2).unwrap();
        assert!(build_poset(&i, None, Mode::Quotient, Some(&ev(&[1, 0, 1])), 100).is_err());
        let p = build_poset(&i, None, Mode::Quotient, Some(&ev(&[2, 1, 1])), 100).unwrap();
        assert_eq!(p.len(), 7);
    }
}
