//! Checks that tie the engines to the closed forms: lemma identities, the
//! `(n, m, t)` sweep, the `U_{m,t}` bounds and the exploratory `m = 2` table.

mod checks;
mod stefan;
mod sweep;

pub use checks::{identity_grid, identity_items, umt_items, vi_v_pairs, CheckItem, LemmaId, Status};
pub use stefan::{explore_stefan, StefanRow};
pub use sweep::{run_sweep, sweep_cell, Direct, Oracle, SweepConfig, SweepRow};
