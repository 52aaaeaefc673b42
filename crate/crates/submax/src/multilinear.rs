//! Exact and sampled evaluation of the multilinear extension and its
//! per-element marginals, plus the Hoeffding-calibrated sample-size formula.
//!
//! The multilinear extension of `f` at `y` is the expected value of `f` on a
//! random set that contains each element `i` independently with probability
//! `y_i`. Exact evaluation enumerates all subsets and is reserved for
//! desk-scale verification; the solver relies on the sampled marginal
//! estimator.

use crate::error::{Error, Result};
use crate::functions::{MarginalBounds, SubmodularOracle};
use crate::ground::{ElementSet, FractionalPoint};
use crate::stream::{sample_random_set_into, RandomStream};
use serde::{Deserialize, Serialize};

/// Hard cap on `n` for exhaustive subset enumeration (`2^20` oracle calls).
pub const EXACT_LIMIT: usize = 20;

/// Knobs controlling the sampled marginal estimator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimatorConfig {
    /// Accuracy target; the per-estimate additive error scales with
    /// `epsilon / r`.
    pub epsilon: f64,
    /// Multiplier on the theoretical sample count. The theoretical counts are
    /// impractically large at desk scale; this knob makes the cost/accuracy
    /// trade explicit and is always echoed in traces.
    pub sample_multiplier: f64,
    /// Optional ceiling on the sample count.
    pub sample_cap: Option<u64>,
    /// Per-estimate failure probability; `None` uses `1/n^2`, which yields
    /// the usual `log n` factor in the count.
    pub failure_prob: Option<f64>,
}

impl EstimatorConfig {
    pub fn new(epsilon: f64) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon <= 1.0) {
            return Err(Error::InvalidConfig(format!(
                "estimator epsilon must be in (0, 1], got {epsilon}"
            )));
        }
        Ok(EstimatorConfig {
            epsilon,
            sample_multiplier: 1.0,
            sample_cap: None,
            failure_prob: None,
        })
    }

    pub fn with_multiplier(mut self, multiplier: f64) -> Self {
        self.sample_multiplier = multiplier;
        self
    }

    pub fn with_cap(mut self, cap: u64) -> Self {
        self.sample_cap = Some(cap);
        self
    }

    pub fn with_failure_prob(mut self, p: f64) -> Self {
        self.failure_prob = Some(p);
        self
    }
}

/// One sampled marginal value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MarginalEstimate {
    pub element: usize,
    pub value: f64,
    pub samples_used: u64,
}

/// Exact multilinear extension value: the full sum over all subsets with
/// product weights. Costs `2^n` oracle calls; rejected for `n > 20`.
pub fn exact_value(f: &dyn SubmodularOracle, y: &FractionalPoint) -> Result<f64> {
    let ground = f.ground();
    let n = ground.size();
    if n > EXACT_LIMIT {
        return Err(Error::GroundSetTooLarge {
            n,
            limit: EXACT_LIMIT,
        });
    }
    let coords = y.coords();
    let mut total = 0.0;
    let mut subset = ElementSet::empty(ground);
    for mask in 0u64..(1u64 << n) {
        let mut weight = 1.0;
        for (i, &c) in coords.iter().enumerate() {
            weight *= if (mask >> i) & 1 == 1 { c } else { 1.0 - c };
            if weight == 0.0 {
                break;
            }
        }
        if weight == 0.0 {
            continue;
        }
        subset.assign_mask(mask);
        total += weight * f.evaluate(&subset);
    }
    Ok(total)
}

/// Exact marginal of raising coordinate `e` to one:
/// `exact_value(y join 1_e) - exact_value(y)`.
pub fn exact_marginal(f: &dyn SubmodularOracle, y: &FractionalPoint, element: usize) -> Result<f64> {
    f.ground().check_element(element)?;
    let raised = y.join_with_indicator(&ElementSet::singleton(f.ground(), element));
    Ok(exact_value(f, &raised)? - exact_value(f, y)?)
}

/// Hoeffding-calibrated sample count for one marginal estimate:
///
/// `m = ceil(multiplier * e^2 r^2 / (2 eps^2) * ((d_up + d_lo) / d_up)^2 * ln(2 / p))`
///
/// then capped. The `e^2` factor encodes that the residual capacity `1 - y`
/// never drops below `1/e` before the stopping time, so the relative accuracy
/// target translates into this absolute count.
pub fn sample_count(
    rank: usize,
    bounds: &MarginalBounds,
    n: usize,
    cfg: &EstimatorConfig,
) -> Result<u64> {
    if rank == 0 {
        return Err(Error::InvalidConfig("sample count needs rank >= 1".into()));
    }
    if bounds.d_upper <= 0.0 {
        return Err(Error::DegenerateFunction);
    }
    let p = cfg.failure_prob.unwrap_or(1.0 / (n as f64 * n as f64));
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::InvalidConfig(format!(
            "failure probability must be in (0, 1), got {p}"
        )));
    }
    let e2 = std::f64::consts::E * std::f64::consts::E;
    let spread = (bounds.d_upper + bounds.d_lower) / bounds.d_upper;
    let r = rank as f64;
    let raw = cfg.sample_multiplier * e2 * r * r / (2.0 * cfg.epsilon * cfg.epsilon)
        * spread
        * spread
        * (2.0 / p).ln();
    let mut m = raw.ceil() as u64;
    if let Some(cap) = cfg.sample_cap {
        m = m.min(cap);
    }
    Ok(m.max(1))
}

/// Unbiased sampled estimate of the multilinear marginal of `element` at `y`
/// from `m` iid samples, using exactly `2m` value-oracle calls.
///
/// Samples are drawn conditioned on the element being absent and rescaled by
/// `1 - y_e`, which has the same expectation as the unconditioned estimator
/// but a deterministic call count and lower variance. Coordinates already at
/// one (up to 1e-12) have a provably zero marginal and short-circuit with no
/// calls. Aggregation order is fixed by sample index.
pub fn estimate_marginal(
    f: &dyn SubmodularOracle,
    y: &FractionalPoint,
    element: usize,
    m: u64,
    stream: &RandomStream,
) -> MarginalEstimate {
    let y_e = y.get(element);
    if y_e >= 1.0 - 1e-12 {
        return MarginalEstimate {
            element,
            value: 0.0,
            samples_used: 0,
        };
    }
    let mut sample = ElementSet::empty(f.ground());
    let mut sum = 0.0;
    for k in 0..m {
        sample_random_set_into(y, &stream.derive(&[k]), element, &mut sample);
        sample.insert(element);
        let with = f.evaluate(&sample);
        sample.remove(element);
        let without = f.evaluate(&sample);
        sum += with - without;
    }
    MarginalEstimate {
        element,
        value: (1.0 - y_e) * sum / m as f64,
        samples_used: m,
    }
}
