//! Exact cover of Q by the candidate rows as a CNF: one variable per row,
//! exactly one row through every point. Large at-most-one groups use a
//! sequential counter.

use batsat::{lbool, Callbacks, Lit, Solver, SolverInterface, SolverOpts, Var};
use std::time::Instant;

struct Deadline(Option<Instant>);

impl Callbacks for Deadline {
    fn stop(&self) -> bool {
        self.0.is_some_and(|d| Instant::now() >= d)
    }
}

const PAIRWISE_MAX: usize = 5;

/// Chosen rows of a cover, `Ok(None)` if there is none, `Err(())` when the
/// deadline hits first.
pub(super) fn exact_cover(
    num_rows: usize,
    cols: &[Vec<u32>],
    deadline: Option<Instant>,
) -> Result<Option<Vec<usize>>, ()> {
    let mut s = Solver::new(SolverOpts::default(), Deadline(deadline));
    let rows: Vec<Var> = (0..num_rows).map(|_| s.new_var_default()).collect();
    let lit = |v: Var, pos: bool| Lit::new(v, pos);
    for col in cols {
        let xs: Vec<Var> = col.iter().map(|&r| rows[r as usize]).collect();
        let mut c: Vec<Lit> = xs.iter().map(|&v| lit(v, true)).collect();
        if !s.add_clause_reuse(&mut c) {
            return Ok(None);
        }
        let k = xs.len();
        if k <= PAIRWISE_MAX {
            for a in 0..k {
                for b in a + 1..k {
                    s.add_clause_reuse(&mut vec![lit(xs[a], false), lit(xs[b], false)]);
                }
            }
        } else {
            // aux[i] means some x_j with j <= i is true
            let aux: Vec<Var> = (0..k - 1).map(|_| s.new_var_default()).collect();
            s.add_clause_reuse(&mut vec![lit(xs[0], false), lit(aux[0], true)]);
            for i in 1..k - 1 {
                s.add_clause_reuse(&mut vec![lit(xs[i], false), lit(aux[i], true)]);
                s.add_clause_reuse(&mut vec![lit(aux[i - 1], false), lit(aux[i], true)]);
                s.add_clause_reuse(&mut vec![lit(xs[i], false), lit(aux[i - 1], false)]);
            }
            s.add_clause_reuse(&mut vec![lit(xs[k - 1], false), lit(aux[k - 2], false)]);
        }
    }
    let r = s.solve_limited(&[]);
    if r == lbool::TRUE {
        Ok(Some(
            (0..num_rows)
                .filter(|&i| s.value_var(rows[i]) == lbool::TRUE)
                .collect(),
        ))
    } else if r == lbool::FALSE {
        Ok(None)
    } else {
        Err(())
    }
}
