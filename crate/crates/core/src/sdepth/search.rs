//! Exact search for interval partitions with every top at `ρ >= k`.
//!
//! Elements with `ρ > k` are taken as singletons. The rest,
//! `Q = {e : ρ(e) <= k}`, is covered by intervals `[c, d]` inside the poset
//! with `ρ(d) = k`. Any partition of the whole poset with tops `ρ >= k`
//! truncates to one of this shape, because the part of `[c, d]` below level
//! `k` is a product of chains times a truncated Boolean lattice, and that
//! splits into boxes whose tops sit exactly at level `k`.

use super::poset::CharPoset;
use super::{sat, Engine, IntervalPartition};
use crate::error::{Error, Result};
use crate::monomial::ExponentVector;
use std::collections::HashSet;
use std::time::Instant;

const MAX_CELLS: usize = 200_000_000;
const MAX_FAILED: usize = 4_000_000;

struct Row {
    c: Vec<u32>,
    d: Vec<u32>,
    /// Q positions covered by `[c, d]`
    elems: Vec<u32>,
}

struct Problem {
    q_len: usize,
    rows: Vec<Row>,
    /// rows through each Q position, in row order
    col_rows: Vec<Vec<u32>>,
    active: Vec<bool>,
    count: Vec<u32>,
    covered: Vec<u64>,
    /// covered sets already known to be dead ends
    failed: HashSet<Vec<u64>>,
    deadline: Option<Instant>,
    started: Instant,
    nodes: u64,
}

const NOT_IN_Q: u32 = u32::MAX;

impl Problem {
    fn new(poset: &CharPoset, k: usize, deadline: Option<Instant>) -> Result<Self> {
        let n = poset.n();
        let mut q = Vec::new();
        let mut q_pos = vec![NOT_IN_Q; poset.len()];
        for (p, e) in poset.elements().iter().enumerate() {
            if poset.rho(e.exps()) <= k {
                q_pos[p] = q.len() as u32;
                q.push(p);
            }
        }
        let mut lower = Vec::with_capacity(q.len());
        for &p in &q {
            let mut e = poset.elements()[p].exps().to_vec();
            let mut l = Vec::new();
            for i in 0..n {
                if e[i] > 0 {
                    e[i] -= 1;
                    if let Some(r) = poset.index_of(&e) {
                        if q_pos[r] != NOT_IN_Q {
                            l.push(q_pos[r]);
                        }
                    }
                    e[i] += 1;
                }
            }
            lower.push(l);
        }

        // rows: every (c, d) with d at level k and c <= d inside the poset;
        // convexity makes the down-set of d connected through lower covers
        let mut rows = Vec::new();
        let mut cells = 0usize;
        let mut stamp = vec![u32::MAX; q.len()];
        for (top_pos, &tp) in q.iter().enumerate() {
            let d = poset.elements()[tp].exps();
            if poset.rho(d) != k {
                continue;
            }
            let mut stack = vec![top_pos as u32];
            stamp[top_pos] = top_pos as u32;
            while let Some(x) = stack.pop() {
                let c = poset.elements()[q[x as usize]].exps();
                let mut elems = Vec::new();
                for_each_in_box(c, d, |e| {
                    let p = poset.index_of(e).expect("interval inside a convex poset");
                    elems.push(q_pos[p]);
                });
                cells += elems.len();
                if cells > MAX_CELLS {
                    return Err(Error::ResourceLimit { what: "candidate interval cells", actual: cells, cap: MAX_CELLS });
                }
                rows.push((x, Row { c: c.to_vec(), d: d.to_vec(), elems }));
                for &y in &lower[x as usize] {
                    if stamp[y as usize] != top_pos as u32 {
                        stamp[y as usize] = top_pos as u32;
                        stack.push(y);
                    }
                }
            }
        }
        // larger intervals first, then lex on (c, d)
        rows.sort_by(|(xa, a), (xb, b)| {
            b.elems.len().cmp(&a.elems.len()).then(xa.cmp(xb)).then_with(|| a.d.cmp(&b.d))
        });
        let rows: Vec<Row> = rows.into_iter().map(|(_, r)| r).collect();
        let mut col_rows = vec![Vec::new(); q.len()];
        for (r, row) in rows.iter().enumerate() {
            for &e in &row.elems {
                col_rows[e as usize].push(r as u32);
            }
        }
        let count = col_rows.iter().map(|c| c.len() as u32).collect();
        Ok(Problem {
            q_len: q.len(),
            active: vec![true; rows.len()],
            rows,
            col_rows,
            count,
            covered: vec![0; q.len().div_ceil(64)],
            failed: HashSet::new(),
            deadline,
            started: Instant::now(),
            nodes: 0,
        })
    }

    /// Take row `r`: cover its points and retire every row meeting it.
    fn choose(&mut self, r: u32) -> Vec<u32> {
        let mut removed = Vec::new();
        for i in 0..self.rows[r as usize].elems.len() {
            let e = self.rows[r as usize].elems[i] as usize;
            self.covered[e / 64] |= 1 << (e % 64);
            for j in 0..self.col_rows[e].len() {
                let s = self.col_rows[e][j];
                if self.active[s as usize] {
                    self.active[s as usize] = false;
                    removed.push(s);
                    for &f in &self.rows[s as usize].elems {
                        self.count[f as usize] -= 1;
                    }
                }
            }
        }
        removed
    }

    fn unchoose(&mut self, r: u32, removed: Vec<u32>) {
        for &s in removed.iter().rev() {
            self.active[s as usize] = true;
            for &f in &self.rows[s as usize].elems {
                self.count[f as usize] += 1;
            }
        }
        for &e in &self.rows[r as usize].elems {
            self.covered[e as usize / 64] &= !(1 << (e % 64));
        }
    }

    /// Options at a node: live rows through the uncovered point with the
    /// fewest of them, `None` when some point has none left. An empty vector
    /// means everything is covered.
    fn expand(&mut self) -> Result<Option<Vec<u32>>> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) {
            if let Some(dl) = self.deadline {
                if Instant::now() >= dl {
                    return Err(Error::Timeout { millis: self.started.elapsed().as_millis() as u64 });
                }
            }
        }
        if self.failed.contains(&self.covered) {
            return Ok(None);
        }
        let mut pick: Option<usize> = None;
        for x in 0..self.q_len {
            if self.covered[x / 64] >> (x % 64) & 1 == 1 {
                continue;
            }
            if self.count[x] == 0 {
                return Ok(None);
            }
            if pick.is_none_or(|p| self.count[x] < self.count[p]) {
                pick = Some(x);
            }
        }
        let Some(x) = pick else {
            return Ok(Some(Vec::new()));
        };
        Ok(Some(self.col_rows[x].iter().copied().filter(|&r| self.active[r as usize]).collect()))
    }

    fn solve(&mut self) -> Result<Option<Vec<usize>>> {
        struct Frame {
            options: Vec<u32>,
            next: usize,
            applied: Option<(u32, Vec<u32>)>,
        }
        let options = match self.expand()? {
            None => return Ok(None),
            Some(o) if o.is_empty() => return Ok(Some(Vec::new())),
            Some(o) => o,
        };
        let mut stack = vec![Frame { options, next: 0, applied: None }];
        loop {
            let Some(top) = stack.last_mut() else {
                return Ok(None);
            };
            if let Some((r, removed)) = top.applied.take() {
                self.unchoose(r, removed);
            }
            let top = stack.last_mut().unwrap();
            if top.next == top.options.len() {
                stack.pop();
                if self.failed.len() < MAX_FAILED {
                    self.failed.insert(self.covered.clone());
                }
                continue;
            }
            let r = top.options[top.next];
            top.next += 1;
            let removed = self.choose(r);
            stack.last_mut().unwrap().applied = Some((r, removed));
            match self.expand()? {
                None => {}
                Some(o) if o.is_empty() => {
                    return Ok(Some(
                        stack.iter().filter_map(|f| f.applied.as_ref()).map(|(r, _)| *r as usize).collect(),
                    ));
                }
                Some(o) => stack.push(Frame { options: o, next: 0, applied: None }),
            }
        }
    }
}

/// Calls `f` on every point of the box `[c, d]` in lex order.
pub(crate) fn for_each_in_box(c: &[u32], d: &[u32], mut f: impl FnMut(&[u32])) {
    let mut e = c.to_vec();
    loop {
        f(&e);
        let mut k = e.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            if e[k] < d[k] {
                e[k] += 1;
                break;
            }
            e[k] = c[k];
        }
    }
}

/// Decide whether `poset` splits into intervals with every top at `ρ >= k`.
pub fn decide(
    poset: &CharPoset,
    k: usize,
    engine: Engine,
    deadline: Option<Instant>,
) -> Result<Option<IntervalPartition>> {
    let mut prob = Problem::new(poset, k, deadline)?;
    let found = match engine {
        Engine::Backtrack => prob.solve()?,
        Engine::Sat => sat::exact_cover(prob.rows.len(), &prob.col_rows, deadline).map_err(|_| Error::Timeout {
            millis: prob.started.elapsed().as_millis() as u64,
        })?,
    };
    let Some(chosen) = found else {
        return Ok(None);
    };
    let mut intervals: Vec<(ExponentVector, ExponentVector)> = chosen
        .into_iter()
        .map(|r| {
            let row = &prob.rows[r];
            (ExponentVector::from_raw(row.c.clone()), ExponentVector::from_raw(row.d.clone()))
        })
        .collect();
    for e in poset.elements() {
        if poset.rho(e.exps()) > k {
            intervals.push((e.clone(), e.clone()));
        }
    }
    intervals.sort();
    Ok(Some(IntervalPartition {
        g: poset.g().clone(),
        mode: poset.mode(),
        intervals,
        claimed_min_rho: k,
    }))
}
