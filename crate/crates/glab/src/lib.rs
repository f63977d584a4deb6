//! Simulation and estimation laboratory for directed Bernoulli last/first
//! passage percolation and longest common subsequences in random words.
//!
//! The crate is organized around five labs:
//!
//! - [`lattice`] — weight fields, passage-time DPs, geodesics, envelopes,
//!   and brute-force oracles;
//! - [`shape`] — Monte Carlo estimation of normalized passage times,
//!   closed-form bounds, and curvature-exponent fitting;
//! - [`decomp`] — block decompositions, optimal-decomposition skew
//!   checking, resampling sensitivity, and the partition identity;
//! - [`fluct`] — transversal fluctuation profiles and scaling-exponent
//!   fits;
//! - [`lcs`] — the analogous machinery for random-word alignments.
//!
//! Everything is reproducible: randomness is counter-mode (a pure function
//! of seed and counters), so results are independent of thread count and
//! fill order. See the book under `book/` for a guided tour.

pub mod decomp;
pub mod error;
pub mod fluct;
pub mod lattice;
pub mod lcs;
pub mod rng;
pub mod shape;
pub mod stats;

pub use error::{Error, Result};
pub use lattice::{PathMode, Vertex, WeightField};

#[cfg(doctest)]
mod book;
