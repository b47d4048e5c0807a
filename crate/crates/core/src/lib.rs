//! Certification and quantification of randomness in two-station Bell-test
//! trial data under non-signaling assumptions.
//!
//! The pipeline has four stages, mirrored by the modules here:
//!
//! 1. [`polytope`] fits a non-signaling distribution to observed trial
//!    counts by maximum likelihood (training).
//! 2. [`pbr`] builds a positive Bell function `T` from the fitted
//!    distribution by maximizing `E(ln T)` subject to the local-realist
//!    constraints, and certifies its non-signaling excess `m`.
//! 3. [`entropy`] accumulates the product of per-trial `T` values in the
//!    log domain, applies the pass/abort threshold, and turns the observed
//!    violation into a per-string probability bound `delta`.
//! 4. [`soundness`] maps `delta` and the error budget into extractor
//!    parameters (how many bits may be drawn, at what seed cost).
//!
//! [`stats`], [`sim`], [`pmcompare`] and [`io`] supply threshold selection
//! and consistency tests, synthetic trial streams, a baseline comparison
//! against mean-based protocols, and the file formats.

pub mod entropy;
pub mod io;
pub mod pbr;
pub mod pmcompare;
pub mod polytope;
pub mod sim;
mod solver;
pub mod soundness;
pub mod stats;
pub mod types;

pub use types::{BellFunction, CountTable, JointDistribution, Outcome, TrialRecord};
