//! Maximization of non-negative submodular functions under matroid
//! constraints via an accelerated measured continuous greedy with a
//! decreasing-threshold inner loop.
//!
//! The crate is organized around value and independence oracles:
//!
//! - [`functions`]: submodular value oracles (cut, coverage, facility
//!   location, modular) behind the [`SubmodularOracle`] trait.
//! - [`matroids`]: uniform, partition and graphic independence oracles
//!   behind [`MatroidOracle`], plus polytope membership.
//! - [`multilinear`]: exact and Monte Carlo evaluation of the multilinear
//!   extension and its marginals.
//! - [`solver`]: the continuous greedy itself, with a full per-step trace
//!   and exact oracle-call accounting.
//! - [`reference`]: exhaustive desk-scale ground truth (brute force,
//!   submodularity verification).
//! - [`rounding`]: heuristic sample-and-repair conversion of the fractional
//!   output into an independent set.
//!
//! Every randomized component draws from counter-based streams keyed by a
//! single seed, so runs are bit-reproducible.

pub mod error;
pub mod functions;
pub mod ground;
pub mod matroids;
pub mod multilinear;
pub mod reference;
pub mod rounding;
pub mod solver;
pub mod stream;

pub use error::{Error, Result};
pub use functions::{
    compute_marginal_bounds, marginal, CountingOracle, CoverageFunction, CutFunction,
    FacilityLocationFunction, MarginalBounds, ModularFunction, SubmodularOracle,
};
pub use ground::{ElementSet, FractionalPoint, GroundSet};
pub use matroids::{
    rank, CountingMatroid, GraphicMatroid, MatroidKind, MatroidOracle, PartitionMatroid,
    UniformMatroid,
};
pub use multilinear::{
    estimate_marginal, exact_marginal, exact_value, sample_count, EstimatorConfig,
    MarginalEstimate,
};
pub use reference::{brute_force_opt, verify_submodularity, BruteForceResult};
pub use rounding::{sample_and_repair, RoundingConfig};
pub use solver::{
    maximize, predicted_oracle_calls, RunTrace, SolverConfig, StepRecord, ThresholdRecord,
    UpdateRule,
};
pub use stream::{RandomStream, StreamSequence};
