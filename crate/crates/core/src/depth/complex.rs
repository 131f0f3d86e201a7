use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal};

pub const DEFAULT_MAX_VERTICES: usize = 20;

/// A simplicial complex on a subset of `{1..n}`. Faces are bitmasks over the
/// vertex list (bit `k` is `vertices[k]`), sorted by size then value. The
/// void complex has no faces; `{∅}` has the single empty face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    pub vertices: Vec<usize>,
    pub faces: Vec<u32>,
}

impl SimplicialComplex {
    pub fn new(vertices: Vec<usize>, mut faces: Vec<u32>) -> Result<Self> {
        if vertices.len() > 32 {
            return Err(Error::ResourceLimit {
                what: "complex vertex count",
                actual: vertices.len(),
                cap: 32,
            });
        }
        faces.sort_by_key(|f| (f.count_ones(), *f));
        faces.dedup();
        Ok(SimplicialComplex { vertices, faces })
    }

    /// Closes a list of facets downward.
    pub fn from_facets(vertices: Vec<usize>, facets: &[u32]) -> Result<Self> {
        let mut faces = Vec::new();
        for &f in facets {
            // iterate all submasks of f, including 0 and f
            let mut sub = f;
            loop {
                faces.push(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        Self::new(vertices, faces)
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// Face counts by dimension, starting at dimension −1.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0usize; self.vertices.len() + 1];
        for &face in &self.faces {
            f[face.count_ones() as usize] += 1;
        }
        while f.len() > 1 && *f.last().unwrap() == 0 {
            f.pop();
        }
        f
    }

    pub fn is_downward_closed(&self) -> bool {
        let set: std::collections::HashSet<u32> = self.faces.iter().copied().collect();
        self.faces.iter().all(|&f| {
            (0..32).filter(|b| f & (1 << b) != 0).all(|b| set.contains(&(f & !(1 << b))))
        })
    }
}

/// `K^a(I) = { τ ⊆ supp(a) : x^{a-τ} ∈ I }`.
pub fn upper_koszul(
    ideal: &MonomialIdeal,
    a: &ExponentVector,
    max_vertices: usize,
) -> Result<SimplicialComplex> {
    a.check_len(ideal.n())?;
    let vertices = a.support();
    if vertices.len() > max_vertices {
        return Err(Error::ResourceLimit {
            what: "upper Koszul vertex count",
            actual: vertices.len(),
            cap: max_vertices,
        });
    }
    let k = vertices.len();
    let mut scratch = a.exps().to_vec();
    let mut faces = Vec::new();
    for mask in 0u32..(1u32 << k) {
        for (bit, &v) in vertices.iter().enumerate() {
            scratch[v - 1] = a.exps()[v - 1] - ((mask >> bit) & 1);
        }
        if ideal.contains_unchecked(&scratch) {
            faces.push(mask);
        }
    }
    SimplicialComplex::new(vertices, faces)
}
