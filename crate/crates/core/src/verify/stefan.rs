use super::sweep::Oracle;
use crate::error::Result;
use crate::families::{path_ideal, phi, stefan_formula};
use crate::sdepth::Mode;
use serde::{Deserialize, Serialize};

/// Computed `sdepth(S/I_{n,2}^t)` against `max{⌈(n+t-1)/3⌉, 1}`.
/// Exploratory: disagreement is reported, not treated as failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StefanRow {
    pub n: usize,
    pub t: usize,
    pub computed: Option<i64>,
    pub formula: i64,
    /// `None` when the computation did not finish.
    pub agree: Option<bool>,
    pub note: String,
}

pub fn explore_stefan(n: (usize, usize), t: (usize, usize), oracle: &dyn Oracle) -> Result<Vec<StefanRow>> {
    let mut out = Vec::new();
    for n in n.0.max(2)..=n.1 {
        for t in t.0.max(1)..=t.1 {
            let ideal = path_ideal(n, 2)?.power(t as u32)?;
            let formula = stefan_formula(n, t);
            let hint = phi(n, 2, t)?.value.max(0) as usize;
            let (computed, note) = match oracle.sdepth(&ideal, Mode::Quotient, Some(hint)) {
                Ok(r) => (Some(r.value as i64), String::new()),
                Err(e) => (None, e.to_string()),
            };
            out.push(StefanRow { n, t, computed, formula, agree: computed.map(|c| c == formula), note });
        }
    }
    Ok(out)
}
