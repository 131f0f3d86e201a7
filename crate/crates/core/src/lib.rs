//! Exact computations on monomial ideals: depth and projective dimension
//! from multigraded Betti numbers, Stanley depth from interval partitions of
//! the characteristic poset, and the m-path ideal families of a path graph
//! together with their closed-form invariants.
//!
//! All values are exact integers. Everything is a pure function of immutable
//! inputs; the per-degree homology and sweep loops run on rayon when the
//! `parallel` feature is enabled and fall back to plain iterators otherwise.

pub mod depth;
pub mod error;
pub mod families;
pub mod monomial;
pub mod par;
pub mod sdepth;
pub mod verify;

pub use depth::{BettiOptions, BettiTable, Field};
pub use error::{Error, Result};
pub use monomial::{ExponentVector, MonomialIdeal};
pub use sdepth::{IntervalPartition, Mode, SdepthOptions, SdepthResult};
