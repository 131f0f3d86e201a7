//! Multigraded Betti numbers of `S/I` through upper Koszul simplicial
//! complexes on the lcm lattice, then projective dimension and depth by
//! Auslander–Buchsbaum.

mod betti;
mod complex;
mod homology;

pub use betti::{
    betti_table, depth_ideal, depth_quotient, pd_quotient, BettiOptions, BettiRow, BettiTable,
};
pub use complex::{upper_koszul, SimplicialComplex, DEFAULT_MAX_VERTICES};
pub use homology::{boundary_rank, reduced_homology_ranks, Field, HomologyRanks};
