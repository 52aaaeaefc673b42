//! Heuristic rounding of a fractional solution into an independent set.
//!
//! Sample-and-repair carries no approximation guarantee; it is plumbing so
//! that a run can end with a discrete set. Each attempt samples `R ~ R(y)`
//! and, while `R` is dependent, drops the member whose removal costs the
//! least value (removal can even gain value when `f` is non-monotone).

use crate::error::{Error, Result};
use crate::functions::SubmodularOracle;
use crate::ground::{ElementSet, FractionalPoint};
use crate::matroids::MatroidOracle;
use crate::stream::{phase, sample_random_set, RandomStream};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RoundingConfig {
    pub attempts: u32,
    pub seed: u64,
}

impl RoundingConfig {
    pub fn new(seed: u64) -> Self {
        RoundingConfig { attempts: 100, seed }
    }

    pub fn with_attempts(mut self, attempts: u32) -> Result<Self> {
        if attempts == 0 {
            return Err(Error::InvalidConfig("attempts must be >= 1".into()));
        }
        self.attempts = attempts;
        Ok(self)
    }
}

/// Best-of-`attempts` randomized rounding. Attempts use independently derived
/// streams, so the result is reproducible for a given seed regardless of
/// evaluation order. Membership of `y` in the matroid polytope is checked
/// when the matroid supports it.
pub fn sample_and_repair(
    f: &dyn SubmodularOracle,
    matroid: &dyn MatroidOracle,
    y: &FractionalPoint,
    cfg: &RoundingConfig,
) -> Result<ElementSet> {
    if cfg.attempts == 0 {
        return Err(Error::InvalidConfig("attempts must be >= 1".into()));
    }
    match matroid.polytope_membership(y, crate::matroids::MEMBERSHIP_TOL) {
        Ok(false) => {
            return Err(Error::InvalidInstance(
                "fractional point lies outside the matroid polytope".into(),
            ))
        }
        Ok(true) | Err(Error::UnsupportedMembership(_)) => {}
        Err(e) => return Err(e),
    }
    let master = RandomStream::new(cfg.seed);
    let mut best: Option<(ElementSet, f64)> = None;
    for attempt in 0..cfg.attempts {
        let stream = master.derive(&[phase::ROUNDING, attempt as u64]);
        let mut set = sample_random_set(y, &stream);
        while !matroid.is_independent(&set) {
            let current = f.evaluate(&set);
            let mut victim = None;
            let mut least_loss = f64::INFINITY;
            // Ties go to the highest id, so earlier elements survive repair.
            for e in set.iter() {
                let loss = current - f.evaluate(&set.without(e));
                if loss <= least_loss {
                    least_loss = loss;
                    victim = Some(e);
                }
            }
            // A dependent set is never empty, so a victim always exists.
            set.remove(victim.expect("dependent set has a member"));
        }
        let value = f.evaluate(&set);
        match &best {
            Some((_, v)) if *v >= value => {}
            _ => best = Some((set, value)),
        }
    }
    Ok(best.expect("attempts >= 1").0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::CutFunction;
    use crate::ground::GroundSet;
    use crate::matroids::UniformMatroid;
    use crate::reference::brute_force_opt;

    fn ground(n: usize) -> GroundSet {
        GroundSet::new(n).unwrap()
    }

    fn triangle(g: GroundSet) -> CutFunction {
        CutFunction::new(g, vec![(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap()
    }

    #[test]
    fn indicator_of_independent_set_survives() {
        let g = ground(3);
        let f = triangle(g);
        let m = UniformMatroid::new(g, 2);
        let s = ElementSet::from_elements(g, [0, 2]);
        let y = FractionalPoint::indicator(&s);
        let out = sample_and_repair(&f, &m, &y, &RoundingConfig::new(7)).unwrap();
        assert_eq!(out, s);
    }

    #[test]
    fn zero_point_rounds_to_empty_set() {
        let g = ground(3);
        let f = triangle(g);
        let m = UniformMatroid::new(g, 2);
        let y = FractionalPoint::zeros(g);
        let out = sample_and_repair(&f, &m, &y, &RoundingConfig::new(3)).unwrap();
        assert!(out.is_empty());
    }

    #[test]
    fn skewed_point_usually_keeps_the_heavy_element() {
        // Inclusion probabilities: element 0 with 0.9, others 0.05 each, so
        // most attempts sample {0} or a superset repaired down to a single
        // element; {0} cuts 2 edges while {1} or {2} alone also cut 2, but
        // element 0 is sampled far more often.
        let g = ground(3);
        let f = triangle(g);
        let m = UniformMatroid::new(g, 1);
        let y = FractionalPoint::new(vec![0.9, 0.05, 0.05]).unwrap();
        let mut zero_wins = 0;
        for seed in 0..100 {
            let cfg = RoundingConfig::new(seed).with_attempts(1).unwrap();
            let out = sample_and_repair(&f, &m, &y, &cfg).unwrap();
            assert!(m.is_independent(&out));
            if out.to_vec() == vec![0] {
                zero_wins += 1;
            }
        }
        assert!(zero_wins >= 85, "{zero_wins} of 100 attempts kept element 0");
    }

    #[test]
    fn output_is_independent_and_below_opt() {
        let g = ground(4);
        let f = CutFunction::new(g, vec![(0, 1, 2.0), (1, 2, 1.0), (2, 3, 3.0), (0, 3, 1.5)])
            .unwrap();
        let m = UniformMatroid::new(g, 2);
        let opt = brute_force_opt(&f, &m).unwrap();
        for seed in 0..20 {
            let y = FractionalPoint::new(vec![0.5, 0.4, 0.6, 0.3]).unwrap();
            let out = sample_and_repair(&f, &m, &y, &RoundingConfig::new(seed)).unwrap();
            assert!(m.is_independent(&out));
            assert!(f.evaluate(&out) <= opt.opt_value + 1e-9);
        }
    }

    #[test]
    fn repair_is_triggered_and_resolves_dependence() {
        let g = ground(3);
        let f = triangle(g);
        let m = UniformMatroid::new(g, 1);
        let y = FractionalPoint::new(vec![1.0, 1.0, 1.0].iter().map(|&v| v * 0.999).collect())
            .unwrap();
        // y is outside the k=1 polytope; membership check must refuse it.
        assert!(matches!(
            sample_and_repair(&f, &m, &y, &RoundingConfig::new(0)),
            Err(Error::InvalidInstance(_))
        ));
        // Inside the polytope, repairs still fire whenever two elements land.
        let y = FractionalPoint::new(vec![0.4, 0.3, 0.3]).unwrap();
        for seed in 0..10 {
            let out = sample_and_repair(&f, &m, &y, &RoundingConfig::new(seed)).unwrap();
            assert!(out.len() <= 1);
        }
    }

    #[test]
    fn deterministic_given_seed() {
        let g = ground(4);
        let f = CutFunction::new(g, vec![(0, 1, 1.0), (2, 3, 2.0), (1, 2, 0.5)]).unwrap();
        let m = UniformMatroid::new(g, 2);
        let y = FractionalPoint::new(vec![0.6, 0.4, 0.5, 0.5]).unwrap();
        let a = sample_and_repair(&f, &m, &y, &RoundingConfig::new(11)).unwrap();
        let b = sample_and_repair(&f, &m, &y, &RoundingConfig::new(11)).unwrap();
        assert_eq!(a, b);
    }
}
