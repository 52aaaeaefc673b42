//! The measured continuous greedy solver with a decreasing-threshold inner
//! loop, full trace recording, and a closed-form oracle-call predictor.
//!
//! The outer loop integrates `dy/dt = (1 - y) * direction` from `t = 0` to
//! `t = 1` in `1/delta` steps, using the smooth per-step update
//! `y <- 1 + exp(-delta) (y - 1)` on the coordinates of the base chosen by
//! the inner loop. The inner loop scans elements against a geometrically
//! decreasing acceptance threshold, estimating multilinear marginals by
//! sampling.

use crate::error::{Error, Result};
use crate::functions::{compute_marginal_bounds, CountingOracle, MarginalBounds, SubmodularOracle};
use crate::ground::{ElementSet, FractionalPoint};
use crate::matroids::{rank, CountingMatroid, MatroidOracle};
use crate::multilinear::{
    estimate_marginal, exact_value, sample_count, EstimatorConfig, EXACT_LIMIT,
};
use crate::stream::{phase, sample_random_set, RandomStream};
use serde::{Deserialize, Serialize};

/// Outer-loop coordinate update rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum UpdateRule {
    /// `y <- 1 + exp(-delta) (y - 1)`; the default, smoother rule.
    Smooth,
    /// `y <- y + delta (1 - y)`; the classic fixed-step baseline.
    DiscreteStep,
}

/// Solver parameters. `delta` is derived as `1 / ceil(1 / epsilon)` so the
/// time loop lands exactly on `t = 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub epsilon: f64,
    pub delta: f64,
    pub estimator: EstimatorConfig,
    pub seed: u64,
    pub update_rule: UpdateRule,
}

impl SolverConfig {
    /// `epsilon` must be in `(0, 1)`. The approximation guarantee
    /// `1/e - 2 epsilon` is only meaningful below `1/4`, but the algorithm is
    /// well defined (and useful for cost sweeps) on the whole open interval.
    pub fn new(epsilon: f64, seed: u64) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "epsilon must be in (0, 1), got {epsilon}"
            )));
        }
        let steps = (1.0 / epsilon).ceil() as u64;
        let delta = 1.0 / steps as f64;
        Ok(SolverConfig {
            epsilon,
            delta,
            estimator: EstimatorConfig::new(epsilon)?,
            seed,
            update_rule: UpdateRule::Smooth,
        })
    }

    pub fn with_estimator(mut self, estimator: EstimatorConfig) -> Self {
        self.estimator = estimator;
        self
    }

    pub fn with_update_rule(mut self, rule: UpdateRule) -> Self {
        self.update_rule = rule;
        self
    }

    pub fn steps(&self) -> u64 {
        (1.0 / self.delta).round() as u64
    }
}

/// One threshold pass: the threshold value, the estimate produced for every
/// scanned element (ascending id), and the elements accepted at this value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdRecord {
    pub threshold: f64,
    pub estimates: Vec<f64>,
    pub accepted: Vec<usize>,
}

/// Everything recorded about one outer step.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepRecord {
    pub t: f64,
    pub base: Vec<usize>,
    /// `max_i (1 + exp(-delta) (y_i - 1))` at procedure start.
    pub y_prime_max: f64,
    pub thresholds: Vec<ThresholdRecord>,
    pub value_calls: u64,
    pub independence_calls: u64,
    /// Multilinear extension value at `y(t + delta)`; exact when `n <= 20`,
    /// otherwise a sampled estimate (`extension_exact = false`). Monitoring
    /// only; evaluated against the uncounted oracle.
    pub extension_value: f64,
    pub extension_exact: bool,
    pub max_coord: f64,
    pub y_after: Vec<f64>,
}

/// Full record of one solver run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunTrace {
    pub config: SolverConfig,
    pub bounds: MarginalBounds,
    pub rank: usize,
    pub samples_per_estimate: u64,
    pub steps: Vec<StepRecord>,
    pub final_point: Vec<f64>,
    /// Total value-oracle calls, including the `2n + 2` bound-setup calls.
    pub value_calls: u64,
    /// Total independence-oracle calls, including the rank pass.
    pub independence_calls: u64,
    /// The `n` independence calls of the greedy rank pass, reported
    /// separately from the per-threshold-step budget.
    pub rank_independence_calls: u64,
    pub setup_value_calls: u64,
}

/// Smooth per-step coordinate update. Shared verbatim by the solver, the
/// inner loop and the call predictor so their floating-point trajectories
/// agree bit for bit.
#[inline]
pub fn smooth_update(y_i: f64, delta: f64) -> f64 {
    1.0 + (-delta).exp() * (y_i - 1.0)
}

/// Classic fixed-step baseline update applied to the coordinates in `base`.
pub fn discrete_step_update(
    y: &FractionalPoint,
    base: &ElementSet,
    delta: f64,
) -> FractionalPoint {
    let mut out = y.clone();
    for i in base.iter() {
        out.set(i, y.get(i) + delta * (1.0 - y.get(i)));
    }
    out
}

/// Number of threshold values visited, obtained by replaying the loop
/// `w = d_upper; while w >= floor { w *= 1 - epsilon }` so the count matches
/// the solver's floating-point schedule exactly. Approximately
/// `ln(r / (epsilon (1 - y_prime))) / (-ln(1 - epsilon)) + 1`.
fn threshold_pass_count(d_upper: f64, r: usize, epsilon: f64, y_prime: f64) -> u64 {
    let floor = epsilon * d_upper / r as f64 * (1.0 - y_prime);
    if floor <= 0.0 {
        return 0;
    }
    let mut w = d_upper;
    let mut count = 0;
    while w >= floor {
        count += 1;
        w *= 1.0 - epsilon;
    }
    count
}

/// The decreasing-threshold base-selection procedure.
///
/// Starting from `B = empty`, thresholds sweep geometrically down from
/// `d_upper` by factor `1 - epsilon` until `epsilon d_upper / r (1 - y')`.
/// At each threshold every element (ascending id) gets a fresh sampled
/// marginal estimate at the point `y(B, delta)` (current `y` outside `B`,
/// smooth-updated inside `B`) and one independence check; it is accepted
/// when the estimate meets the threshold and `B + e` stays independent.
///
/// Degenerate inputs (`d_upper <= 0` or rank 0) return an empty base with no
/// oracle calls.
#[allow(clippy::too_many_arguments)]
pub fn decreasing_threshold(
    f: &dyn SubmodularOracle,
    matroid: &dyn MatroidOracle,
    y: &FractionalPoint,
    epsilon: f64,
    delta: f64,
    bounds: &MarginalBounds,
    r: usize,
    samples_per_estimate: u64,
    stream: &RandomStream,
) -> (ElementSet, StepRecord) {
    let ground = f.ground();
    let n = ground.size();
    let counting_f = CountingOracle::new(f);
    let counting_m = CountingMatroid::new(matroid);
    let mut base = ElementSet::empty(ground);
    let mut record = StepRecord {
        t: 0.0,
        base: Vec::new(),
        y_prime_max: 0.0,
        thresholds: Vec::new(),
        value_calls: 0,
        independence_calls: 0,
        extension_value: 0.0,
        extension_exact: false,
        max_coord: 0.0,
        y_after: Vec::new(),
    };
    if bounds.d_upper <= 0.0 || r == 0 {
        return (base, record);
    }

    let y_prime = y
        .coords()
        .iter()
        .map(|&c| smooth_update(c, delta))
        .fold(f64::NEG_INFINITY, f64::max);
    record.y_prime_max = y_prime;
    let floor = epsilon * bounds.d_upper / r as f64 * (1.0 - y_prime);
    if floor <= 0.0 {
        // Every coordinate saturated; the schedule would never stop.
        return (base, record);
    }

    // y(B, delta): current y outside B, smooth-updated inside B.
    let mut y_work = y.clone();
    let mut w = bounds.d_upper;
    let mut pass: u64 = 0;
    while w >= floor {
        let mut estimates = Vec::with_capacity(n);
        let mut accepted = Vec::new();
        for e in 0..n {
            if y_work.get(e) >= 1.0 - 1e-12 {
                // Saturated coordinate: marginal provably ~0, skip sampling.
                estimates.push(0.0);
                continue;
            }
            let est = estimate_marginal(
                &counting_f,
                &y_work,
                e,
                samples_per_estimate,
                &stream.derive(&[phase::ESTIMATE, pass, e as u64]),
            );
            estimates.push(est.value);
            let candidate = base.with(e);
            let independent = counting_m.is_independent(&candidate);
            if est.value >= w && independent && !base.contains(e) {
                base.insert(e);
                y_work.set(e, smooth_update(y_work.get(e), delta));
                accepted.push(e);
            }
        }
        record.thresholds.push(ThresholdRecord {
            threshold: w,
            estimates,
            accepted,
        });
        w *= 1.0 - epsilon;
        pass += 1;
    }

    record.base = base.to_vec();
    record.value_calls = counting_f.calls();
    record.independence_calls = counting_m.calls();
    (base, record)
}

/// Runs the full solver: `1/delta` outer steps, each selecting a base via
/// [`decreasing_threshold`] and pushing the base coordinates toward one.
/// Returns the final fractional point together with the complete trace.
pub fn maximize(
    f: &dyn SubmodularOracle,
    matroid: &dyn MatroidOracle,
    config: &SolverConfig,
) -> Result<(FractionalPoint, RunTrace)> {
    let ground = f.ground();
    let n = ground.size();
    if matroid.ground() != ground {
        return Err(Error::InvalidConfig(
            "function and matroid ground sets differ".into(),
        ));
    }
    let counting_f = CountingOracle::new(f);
    let counting_m = CountingMatroid::new(matroid);

    let r = rank(&counting_m);
    let rank_calls = counting_m.calls();
    let bounds = compute_marginal_bounds(&counting_f);
    let setup_value_calls = counting_f.calls();
    let samples_per_estimate = if bounds.d_upper > 0.0 && r > 0 {
        sample_count(r, &bounds, n, &config.estimator)?
    } else {
        0
    };

    let run_stream = RandomStream::new(config.seed);
    let steps = config.steps();
    let mut y = FractionalPoint::zeros(ground);
    let mut records = Vec::with_capacity(steps as usize);

    for j in 0..steps {
        let t = j as f64 * config.delta;
        let step_stream = run_stream.derive(&[phase::SOLVER_STEP, j]);
        let (base, mut record) = decreasing_threshold(
            &counting_f,
            &counting_m,
            &y,
            config.epsilon,
            config.delta,
            &bounds,
            r,
            samples_per_estimate,
            &step_stream,
        );
        for i in base.iter() {
            let updated = match config.update_rule {
                UpdateRule::Smooth => smooth_update(y.get(i), config.delta),
                UpdateRule::DiscreteStep => y.get(i) + config.delta * (1.0 - y.get(i)),
            };
            y.set(i, updated);
        }
        record.t = t;
        record.max_coord = y.max_coord();
        record.y_after = y.coords().to_vec();
        // Monitoring value of the extension at y(t + delta); uses the raw
        // oracle so algorithm call tallies stay clean.
        if n <= EXACT_LIMIT {
            record.extension_value = exact_value(f, &y)?;
            record.extension_exact = true;
        } else {
            let monitor = run_stream.derive(&[phase::MONITOR, j]);
            let m = 1000u64;
            let mut sum = 0.0;
            for k in 0..m {
                let s = sample_random_set(&y, &monitor.derive(&[k]));
                sum += f.evaluate(&s);
            }
            record.extension_value = sum / m as f64;
            record.extension_exact = false;
        }
        records.push(record);
    }

    let trace = RunTrace {
        config: config.clone(),
        bounds,
        rank: r,
        samples_per_estimate,
        steps: records,
        final_point: y.coords().to_vec(),
        value_calls: counting_f.calls(),
        independence_calls: counting_m.calls(),
        rank_independence_calls: rank_calls,
        setup_value_calls,
    };
    Ok((y, trace))
}

/// Closed-form prediction of the solver's total oracle-call tallies.
///
/// The schedule is deterministic: every threshold pass makes `n` estimates of
/// `2m` value calls each plus `n` independence checks, and setup adds
/// `2n + 2` value calls and `n` rank-pass independence calls. The per-step
/// pass count depends on the running maximum coordinate, which is replayed
/// here under the assumption that some element is accepted at every step
/// (the trajectory the smooth update drives toward `1 - exp(-t)`). Realized
/// tallies match exactly whenever that holds and no estimate short-circuits
/// on a saturated coordinate. Asymptotically
/// `O(n r^2 / eps^4 ((d_up + d_lo)/d_up)^2 log^2(n / eps))` value calls and
/// `O(n / eps^2 log(r / eps))` independence calls.
pub fn predicted_oracle_calls(
    n: usize,
    r: usize,
    epsilon: f64,
    bounds: &MarginalBounds,
    estimator: &EstimatorConfig,
) -> Result<(u64, u64)> {
    let config = SolverConfig::new(epsilon, 0)?;
    let delta = config.delta;
    let steps = config.steps();
    let setup_value = 2 * n as u64 + 2;
    let rank_ind = n as u64;
    if bounds.d_upper <= 0.0 || r == 0 {
        return Ok((setup_value, rank_ind));
    }
    let m = sample_count(r, bounds, n, estimator)?;
    let mut value_calls = setup_value;
    let mut independence_calls = rank_ind;
    let mut y_max = 0.0f64;
    for _ in 0..steps {
        let y_prime = smooth_update(y_max, delta);
        let passes = threshold_pass_count(bounds.d_upper, r, epsilon, y_prime);
        value_calls += passes * n as u64 * 2 * m;
        independence_calls += passes * n as u64;
        y_max = smooth_update(y_max, delta).clamp(0.0, 1.0);
    }
    Ok((value_calls, independence_calls))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::{CutFunction, ModularFunction};
    use crate::ground::GroundSet;
    use crate::matroids::{polytope_membership, UniformMatroid, MEMBERSHIP_TOL};
    use crate::reference::brute_force_opt;

    fn ground(n: usize) -> GroundSet {
        GroundSet::new(n).unwrap()
    }

    fn exact_estimator(cap: u64) -> EstimatorConfig {
        EstimatorConfig::new(0.5).unwrap().with_cap(cap)
    }

    #[test]
    fn config_derives_divisible_delta() {
        let c = SolverConfig::new(0.3, 0).unwrap();
        assert_eq!(c.steps(), 4);
        assert!((c.delta - 0.25).abs() < 1e-15);
        assert!(c.delta <= c.epsilon);
        assert!(SolverConfig::new(0.0, 0).is_err());
        assert!(SolverConfig::new(1.0, 0).is_err());
    }

    #[test]
    fn threshold_selects_modular_elements_in_order() {
        // Modular weights (3, 2, 1), uniform k = 2, y = 0, epsilon = 0.5:
        // element 0 accepted at w = 3, element 1 at w = 1.5.
        let g = ground(3);
        let f = ModularFunction::new(g, vec![3.0, 2.0, 1.0]).unwrap();
        let m = UniformMatroid::new(g, 2);
        let bounds = compute_marginal_bounds(&f);
        let y = FractionalPoint::zeros(g);
        let (base, record) = decreasing_threshold(
            &f,
            &m,
            &y,
            0.5,
            0.5,
            &bounds,
            2,
            4,
            &RandomStream::new(0),
        );
        assert_eq!(base.to_vec(), vec![0, 1]);
        assert_eq!(record.thresholds[0].threshold, 3.0);
        assert_eq!(record.thresholds[0].accepted, vec![0]);
        assert_eq!(record.thresholds[1].threshold, 1.5);
        assert_eq!(record.thresholds[1].accepted, vec![1]);
    }

    #[test]
    fn threshold_returns_empty_for_degenerate_function() {
        let g = ground(3);
        let f = ModularFunction::new(g, vec![0.0; 3]).unwrap();
        let m = UniformMatroid::new(g, 2);
        let bounds = compute_marginal_bounds(&f);
        let y = FractionalPoint::zeros(g);
        let (base, record) =
            decreasing_threshold(&f, &m, &y, 0.5, 0.5, &bounds, 2, 4, &RandomStream::new(0));
        assert!(base.is_empty());
        assert!(record.thresholds.is_empty());
        assert_eq!(record.value_calls, 0);
    }

    #[test]
    fn threshold_respects_independence() {
        // Uniform k = 1 blocks the second-best element.
        let g = ground(2);
        let f = ModularFunction::new(g, vec![5.0, 4.0]).unwrap();
        let m = UniformMatroid::new(g, 1);
        let bounds = compute_marginal_bounds(&f);
        let y = FractionalPoint::zeros(g);
        let (base, _) =
            decreasing_threshold(&f, &m, &y, 0.5, 0.5, &bounds, 1, 4, &RandomStream::new(0));
        assert_eq!(base.to_vec(), vec![0]);
    }

    #[test]
    fn free_matroid_modular_reaches_residual_limit() {
        // With every element accepted at every step the recurrence solves to
        // y_i(1) = 1 - 1/e.
        let g = ground(4);
        let f = ModularFunction::new(g, vec![2.0, 2.0, 2.0, 2.0]).unwrap();
        let m = UniformMatroid::new(g, 4);
        let config = SolverConfig::new(0.2, 7)
            .unwrap()
            .with_estimator(exact_estimator(4));
        let (y, trace) = maximize(&f, &m, &config).unwrap();
        let limit = 1.0 - (-1.0f64).exp();
        for i in 0..4 {
            assert!((y.get(i) - limit).abs() < 1e-9, "y_{i} = {}", y.get(i));
        }
        assert_eq!(trace.steps.len(), 5);
        for rec in &trace.steps {
            assert_eq!(rec.base.len(), 4);
        }
    }

    #[test]
    fn zero_function_yields_zero_point() {
        let g = ground(3);
        let f = ModularFunction::new(g, vec![0.0; 3]).unwrap();
        let m = UniformMatroid::new(g, 2);
        let config = SolverConfig::new(0.25, 3).unwrap();
        let (y, trace) = maximize(&f, &m, &config).unwrap();
        assert_eq!(y.coords(), &[0.0, 0.0, 0.0]);
        assert_eq!(trace.steps.len(), 4);
        assert!(trace.steps.iter().all(|s| s.base.is_empty()));
    }

    #[test]
    fn triangle_run_meets_guarantee() {
        let g = ground(3);
        let f = CutFunction::new(g, vec![(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap();
        let m = UniformMatroid::new(g, 1);
        let opt = brute_force_opt(&f, &m).unwrap();
        assert_eq!(opt.opt_value, 2.0);
        let config = SolverConfig::new(0.1, 11)
            .unwrap()
            .with_estimator(EstimatorConfig::new(0.1).unwrap().with_cap(500));
        let (y, _) = maximize(&f, &m, &config).unwrap();
        let value = exact_value(&f, &y).unwrap();
        let bound = (1.0 / std::f64::consts::E - 0.2) * opt.opt_value;
        assert!(value >= bound, "F = {value} < bound {bound}");
    }

    #[test]
    fn discrete_step_update_examples() {
        let g = ground(3);
        let y = FractionalPoint::new(vec![0.0, 1.0, 0.5]).unwrap();
        let base = ElementSet::from_elements(g, [0, 1, 2]);
        let up = discrete_step_update(&y, &base, 0.1);
        assert!((up.get(0) - 0.1).abs() < 1e-15);
        assert_eq!(up.get(1), 1.0);
        let up2 = discrete_step_update(&y, &base, 0.2);
        assert!((up2.get(2) - 0.6).abs() < 1e-15);
        let smooth = smooth_update(0.5, 0.2);
        assert!((smooth - 0.590634623).abs() < 1e-8);
    }

    #[test]
    fn solver_invariants_hold_on_small_cut() {
        let g = ground(5);
        let f = CutFunction::new(
            g,
            vec![
                (0, 1, 1.0),
                (1, 2, 0.5),
                (2, 3, 1.5),
                (3, 4, 0.8),
                (0, 4, 1.2),
                (1, 3, 0.7),
            ],
        )
        .unwrap();
        let m = UniformMatroid::new(g, 2);
        let config = SolverConfig::new(0.2, 99)
            .unwrap()
            .with_estimator(EstimatorConfig::new(0.2).unwrap().with_cap(200));
        let (y, trace) = maximize(&f, &m, &config).unwrap();
        assert!(polytope_membership(&m, &y, MEMBERSHIP_TOL).unwrap());
        let mut prev = vec![0.0; 5];
        for rec in &trace.steps {
            let t_next = rec.t + config.delta;
            assert!(rec.max_coord <= 1.0 - (-t_next).exp() + 1e-12);
            for (i, (&now, &before)) in rec.y_after.iter().zip(&prev).enumerate() {
                assert!(now >= before, "coordinate {i} decreased");
                assert!(now - before <= config.delta + 1e-12);
            }
            assert!(m.is_independent(&ElementSet::from_elements(g, rec.base.iter().copied())));
            assert!(rec.base.len() <= 2);
            for pair in rec.thresholds.windows(2) {
                let ratio = pair[1].threshold / pair[0].threshold;
                assert!((ratio - 0.8).abs() < 1e-12);
            }
            if let Some(first) = rec.thresholds.first() {
                assert_eq!(first.threshold, trace.bounds.d_upper);
            }
            prev = rec.y_after.clone();
        }
        // Tallies decompose into setup plus per-step counts.
        let step_value: u64 = trace.steps.iter().map(|s| s.value_calls).sum();
        let step_ind: u64 = trace.steps.iter().map(|s| s.independence_calls).sum();
        assert_eq!(trace.value_calls, trace.setup_value_calls + step_value);
        assert_eq!(
            trace.independence_calls,
            trace.rank_independence_calls + step_ind
        );
        assert_eq!(trace.setup_value_calls, 2 * 5 + 2);
        assert_eq!(trace.rank_independence_calls, 5);
    }

    #[test]
    fn identical_seeds_reproduce_traces() {
        let g = ground(4);
        let f = CutFunction::new(g, vec![(0, 1, 1.0), (1, 2, 2.0), (2, 3, 0.5)]).unwrap();
        let m = UniformMatroid::new(g, 2);
        let config = SolverConfig::new(0.25, 42)
            .unwrap()
            .with_estimator(EstimatorConfig::new(0.25).unwrap().with_cap(50));
        let (y1, t1) = maximize(&f, &m, &config).unwrap();
        let (y2, t2) = maximize(&f, &m, &config).unwrap();
        assert_eq!(y1, y2);
        assert_eq!(t1, t2);
    }

    #[test]
    fn prediction_matches_realized_tallies_on_modular_instance() {
        let g = ground(6);
        let f = ModularFunction::new(g, vec![6.0, 5.0, 4.0, 3.0, 2.0, 1.0]).unwrap();
        let m = UniformMatroid::new(g, 3);
        let estimator = EstimatorConfig::new(0.2).unwrap().with_cap(8);
        let config = SolverConfig::new(0.2, 5)
            .unwrap()
            .with_estimator(estimator.clone());
        let (_, trace) = maximize(&f, &m, &config).unwrap();
        let (value, ind) =
            predicted_oracle_calls(6, trace.rank, 0.2, &trace.bounds, &estimator).unwrap();
        assert_eq!(trace.value_calls, value);
        assert_eq!(trace.independence_calls, ind);
    }

    #[test]
    fn prediction_epsilon_scaling() {
        let bounds = MarginalBounds {
            d_upper: 1.0,
            d_lower: 0.0,
        };
        let est = |eps: f64| EstimatorConfig::new(eps).unwrap();
        let (v1, _) = predicted_oracle_calls(10, 3, 0.2, &bounds, &est(0.2)).unwrap();
        let (v2, _) = predicted_oracle_calls(10, 3, 0.1, &bounds, &est(0.1)).unwrap();
        let ratio = v2 as f64 / v1 as f64;
        // Halving epsilon multiplies value calls by ~16 (holding logs).
        assert!(ratio > 10.0 && ratio < 26.0, "ratio = {ratio}");
    }

    #[test]
    fn prediction_spread_scaling() {
        let est = EstimatorConfig::new(0.2).unwrap();
        let monotone = MarginalBounds {
            d_upper: 1.0,
            d_lower: 0.0,
        };
        let symmetric = MarginalBounds {
            d_upper: 1.0,
            d_lower: 1.0,
        };
        let (v_mono, i_mono) = predicted_oracle_calls(10, 3, 0.2, &monotone, &est).unwrap();
        let (v_sym, i_sym) = predicted_oracle_calls(10, 3, 0.2, &symmetric, &est).unwrap();
        assert_eq!(i_mono, i_sym);
        let ratio = (v_sym - 22) as f64 / (v_mono - 22) as f64;
        assert!((ratio - 4.0).abs() < 0.05, "ratio = {ratio}");
    }
}
