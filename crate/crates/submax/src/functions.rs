//! Submodular value oracles, call accounting, and marginal-value bounds.

use crate::error::{Error, Result};
use crate::ground::{ElementSet, GroundSet};
use serde::{Deserialize, Serialize};
use std::sync::atomic::{AtomicU64, Ordering};

/// Largest instance weight magnitude accepted by the shipped oracles. Keeps
/// the Hoeffding ranges used for sample sizing numerically meaningful.
pub const MAX_WEIGHT: f64 = 1e9;

/// Black-box value oracle for a non-negative submodular set function.
pub trait SubmodularOracle: Send + Sync {
    fn ground(&self) -> GroundSet;
    fn evaluate(&self, set: &ElementSet) -> f64;
}

fn check_weight(w: f64, what: &str) -> Result<()> {
    if !w.is_finite() || w < 0.0 {
        return Err(Error::InvalidInstance(format!(
            "{what} must be a non-negative finite number, got {w}"
        )));
    }
    if w > MAX_WEIGHT {
        return Err(Error::InvalidInstance(format!(
            "{what} = {w} exceeds the supported magnitude {MAX_WEIGHT}"
        )));
    }
    Ok(())
}

/// Weighted cut function on an undirected graph: the total weight of edges
/// with exactly one endpoint inside the query set. Non-monotone in general,
/// with `f(empty) = f(E) = 0`.
#[derive(Debug, Clone)]
pub struct CutFunction {
    ground: GroundSet,
    edges: Vec<(u32, u32, f64)>,
}

impl CutFunction {
    pub fn new(ground: GroundSet, edges: Vec<(usize, usize, f64)>) -> Result<Self> {
        let n = ground.size();
        let mut compact = Vec::with_capacity(edges.len());
        for (u, v, w) in edges {
            ground.check_element(u)?;
            ground.check_element(v)?;
            if u == v {
                return Err(Error::InvalidInstance(format!("self loop at vertex {u}")));
            }
            check_weight(w, "edge weight")?;
            compact.push((u as u32, v as u32, w));
        }
        let _ = n;
        Ok(CutFunction {
            ground,
            edges: compact,
        })
    }

    /// Complete graph with unit weights; handy in tests.
    pub fn unit_complete(ground: GroundSet) -> Self {
        let n = ground.size();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u as u32, v as u32, 1.0));
            }
        }
        CutFunction { ground, edges }
    }
}

impl SubmodularOracle for CutFunction {
    fn ground(&self) -> GroundSet {
        self.ground
    }

    fn evaluate(&self, set: &ElementSet) -> f64 {
        let mut acc = 0.0;
        for &(u, v, w) in &self.edges {
            if set.contains(u as usize) != set.contains(v as usize) {
                acc += w;
            }
        }
        acc
    }
}

/// Weighted coverage function: each element covers a subset of a weighted
/// universe; `f(S)` is the weight of the union of covered items. Monotone.
#[derive(Debug, Clone)]
pub struct CoverageFunction {
    ground: GroundSet,
    universe_weights: Vec<f64>,
    // One bitmask word-vector per element over the universe.
    covers: Vec<Vec<u64>>,
}

impl CoverageFunction {
    pub fn new(
        ground: GroundSet,
        universe_weights: Vec<f64>,
        covers: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if covers.len() != ground.size() {
            return Err(Error::InvalidInstance(format!(
                "expected {} cover lists, got {}",
                ground.size(),
                covers.len()
            )));
        }
        for &w in &universe_weights {
            check_weight(w, "universe weight")?;
        }
        let universe = universe_weights.len();
        let words = universe.div_ceil(64).max(1);
        let mut masks = Vec::with_capacity(covers.len());
        for items in &covers {
            let mut mask = vec![0u64; words];
            for &item in items {
                if item >= universe {
                    return Err(Error::InvalidInstance(format!(
                        "covered item {item} outside universe of size {universe}"
                    )));
                }
                mask[item >> 6] |= 1u64 << (item & 63);
            }
            masks.push(mask);
        }
        Ok(CoverageFunction {
            ground,
            universe_weights,
            covers: masks,
        })
    }
}

impl SubmodularOracle for CoverageFunction {
    fn ground(&self) -> GroundSet {
        self.ground
    }

    fn evaluate(&self, set: &ElementSet) -> f64 {
        let words = self.covers.first().map_or(1, Vec::len);
        let mut stack = [0u64; 8];
        let mut heap;
        let union: &mut [u64] = if words <= 8 {
            &mut stack[..words]
        } else {
            heap = vec![0u64; words];
            &mut heap
        };
        for e in set.iter() {
            for (acc, &m) in union.iter_mut().zip(&self.covers[e]) {
                *acc |= m;
            }
        }
        let mut total = 0.0;
        for (wi, &word) in union.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                total += self.universe_weights[wi * 64 + bit];
            }
        }
        total
    }
}

/// Facility-location benefit function: each client collects the best benefit
/// among the open facilities, `f(S) = sum_c max_{j in S} benefit[c][j]` with
/// `f(empty) = 0`. Monotone.
#[derive(Debug, Clone)]
pub struct FacilityLocationFunction {
    ground: GroundSet,
    benefits: Vec<Vec<f64>>,
}

impl FacilityLocationFunction {
    pub fn new(ground: GroundSet, benefits: Vec<Vec<f64>>) -> Result<Self> {
        for row in &benefits {
            if row.len() != ground.size() {
                return Err(Error::InvalidInstance(format!(
                    "benefit row has {} entries, expected {}",
                    row.len(),
                    ground.size()
                )));
            }
            for &b in row {
                check_weight(b, "benefit")?;
            }
        }
        Ok(FacilityLocationFunction { ground, benefits })
    }
}

impl SubmodularOracle for FacilityLocationFunction {
    fn ground(&self) -> GroundSet {
        self.ground
    }

    fn evaluate(&self, set: &ElementSet) -> f64 {
        let mut total = 0.0;
        for row in &self.benefits {
            let mut best = 0.0f64;
            for j in set.iter() {
                best = best.max(row[j]);
            }
            total += best;
        }
        total
    }
}

/// Additive (modular) function with non-negative weights.
#[derive(Debug, Clone)]
pub struct ModularFunction {
    ground: GroundSet,
    weights: Vec<f64>,
}

impl ModularFunction {
    pub fn new(ground: GroundSet, weights: Vec<f64>) -> Result<Self> {
        if weights.len() != ground.size() {
            return Err(Error::InvalidInstance(format!(
                "expected {} weights, got {}",
                ground.size(),
                weights.len()
            )));
        }
        for &w in &weights {
            check_weight(w, "weight")?;
        }
        Ok(ModularFunction { ground, weights })
    }
}

impl SubmodularOracle for ModularFunction {
    fn ground(&self) -> GroundSet {
        self.ground
    }

    fn evaluate(&self, set: &ElementSet) -> f64 {
        set.iter().map(|i| self.weights[i]).sum()
    }
}

/// Wrapper counting every value-oracle call. The counter is atomic so that
/// parallel samplers keep exact tallies.
pub struct CountingOracle<'a> {
    inner: &'a dyn SubmodularOracle,
    calls: AtomicU64,
}

impl<'a> CountingOracle<'a> {
    pub fn new(inner: &'a dyn SubmodularOracle) -> Self {
        CountingOracle {
            inner,
            calls: AtomicU64::new(0),
        }
    }

    pub fn calls(&self) -> u64 {
        self.calls.load(Ordering::Relaxed)
    }
}

impl SubmodularOracle for CountingOracle<'_> {
    fn ground(&self) -> GroundSet {
        self.inner.ground()
    }

    fn evaluate(&self, set: &ElementSet) -> f64 {
        self.calls.fetch_add(1, Ordering::Relaxed);
        self.inner.evaluate(set)
    }
}

/// Marginal value `f(S + i) - f(S)`. Returns 0 without oracle calls when
/// `i` is already a member, since `S + i = S`.
pub fn marginal(f: &dyn SubmodularOracle, set: &ElementSet, element: usize) -> f64 {
    if set.contains(element) {
        return 0.0;
    }
    f.evaluate(&set.with(element)) - f.evaluate(set)
}

/// Global bounds on marginal values: `-d_lower <= f_S(i) <= d_upper` for all
/// sets `S` and elements `i`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MarginalBounds {
    pub d_upper: f64,
    pub d_lower: f64,
}

/// Computes [`MarginalBounds`] with exactly `2n + 2` value-oracle calls.
///
/// By submodularity the largest marginal of `i` is attained at the empty set
/// and the most negative one at `E - i`, so both bounds are exact:
/// `d_upper = max_i (f({i}) - f(empty))` and
/// `d_lower = max_i max(0, f(E - i) - f(E))`.
pub fn compute_marginal_bounds(f: &dyn SubmodularOracle) -> MarginalBounds {
    let ground = f.ground();
    let n = ground.size();
    let empty = ElementSet::empty(ground);
    let full = ElementSet::full(ground);
    let f_empty = f.evaluate(&empty);
    let f_full = f.evaluate(&full);
    let mut d_upper = 0.0f64;
    let mut d_lower = 0.0f64;
    for i in 0..n {
        d_upper = d_upper.max(f.evaluate(&empty.with(i)) - f_empty);
        d_lower = d_lower.max(f.evaluate(&full.without(i)) - f_full);
    }
    MarginalBounds { d_upper, d_lower }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stream::RandomStream;

    pub(crate) fn triangle_cut() -> CutFunction {
        let g = GroundSet::new(3).unwrap();
        CutFunction::new(g, vec![(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap()
    }

    #[test]
    fn triangle_marginal_from_empty() {
        let f = triangle_cut();
        let empty = ElementSet::empty(f.ground());
        assert_eq!(marginal(&f, &empty, 0), 2.0);
    }

    #[test]
    fn marginal_of_member_is_zero() {
        let f = triangle_cut();
        let s = ElementSet::from_elements(f.ground(), [0, 1]);
        assert_eq!(marginal(&f, &s, 1), 0.0);
    }

    #[test]
    fn redundant_coverage_marginal_is_zero() {
        let g = GroundSet::new(3).unwrap();
        let f = CoverageFunction::new(
            g,
            vec![1.0, 2.0],
            vec![vec![0, 1], vec![0], vec![1]],
        )
        .unwrap();
        // Element 1 only covers items already covered by element 0.
        let s = ElementSet::singleton(g, 0);
        assert_eq!(marginal(&f, &s, 1), 0.0);
        assert_eq!(marginal(&f, &s, 2), 0.0);
    }

    #[test]
    fn triangle_bounds() {
        let f = triangle_cut();
        let b = compute_marginal_bounds(&f);
        assert_eq!(b.d_upper, 2.0);
        assert_eq!(b.d_lower, 2.0);
    }

    #[test]
    fn monotone_coverage_has_zero_lower_bound() {
        let g = GroundSet::new(4).unwrap();
        let f = CoverageFunction::new(
            g,
            vec![1.0, 1.5, 0.5],
            vec![vec![0], vec![0, 1], vec![2], vec![1, 2]],
        )
        .unwrap();
        let b = compute_marginal_bounds(&f);
        assert_eq!(b.d_lower, 0.0);
        assert!(b.d_upper > 0.0);
    }

    #[test]
    fn modular_bounds() {
        let g = GroundSet::new(3).unwrap();
        let f = ModularFunction::new(g, vec![1.0, 3.0, 2.0]).unwrap();
        let b = compute_marginal_bounds(&f);
        assert_eq!(b.d_upper, 3.0);
        assert_eq!(b.d_lower, 0.0);
    }

    #[test]
    fn bounds_use_exactly_2n_plus_2_calls() {
        let f = triangle_cut();
        let counting = CountingOracle::new(&f);
        let _ = compute_marginal_bounds(&counting);
        assert_eq!(counting.calls(), 2 * 3 + 2);
    }

    #[test]
    fn counting_oracle_counts_every_call() {
        let f = triangle_cut();
        let counting = CountingOracle::new(&f);
        let s = ElementSet::singleton(f.ground(), 1);
        for _ in 0..17 {
            let _ = counting.evaluate(&s);
        }
        assert_eq!(counting.calls(), 17);
        assert_eq!(counting.evaluate(&s), f.evaluate(&s));
        assert_eq!(counting.calls(), 18);
    }

    #[test]
    fn bounds_hold_by_exhaustion() {
        // Exhaustive scan over all (S, i not in S) pairs for each shipped
        // oracle family on a small instance.
        let g = GroundSet::new(5).unwrap();
        let stream = RandomStream::new(99);
        let mut seq = stream.sequence();
        let mut edges = Vec::new();
        for u in 0..5usize {
            for v in (u + 1)..5 {
                edges.push((u, v, seq.next_f64() * 2.0));
            }
        }
        let cut = CutFunction::new(g, edges).unwrap();
        let fac = FacilityLocationFunction::new(
            g,
            (0..4)
                .map(|_| (0..5).map(|_| seq.next_f64()).collect())
                .collect(),
        )
        .unwrap();
        for f in [&cut as &dyn SubmodularOracle, &fac] {
            let b = compute_marginal_bounds(f);
            let mut s = ElementSet::empty(g);
            for mask in 0u64..(1 << 5) {
                s.assign_mask(mask);
                for i in 0..5 {
                    if s.contains(i) {
                        continue;
                    }
                    let m = marginal(f, &s, i);
                    assert!(m <= b.d_upper + 1e-9, "marginal {m} above {}", b.d_upper);
                    assert!(m >= -b.d_lower - 1e-9, "marginal {m} below -{}", b.d_lower);
                }
            }
        }
    }

    #[test]
    fn negative_weights_rejected() {
        let g = GroundSet::new(2).unwrap();
        assert!(CutFunction::new(g, vec![(0, 1, -0.5)]).is_err());
        assert!(ModularFunction::new(g, vec![1.0, -1.0]).is_err());
    }

    #[test]
    fn shipped_oracles_are_submodular_on_random_pairs() {
        let g = GroundSet::new(6).unwrap();
        let mut seq = RandomStream::new(123).sequence();
        let mut edges = Vec::new();
        for u in 0..6usize {
            for v in (u + 1)..6 {
                if seq.next_f64() < 0.7 {
                    edges.push((u, v, seq.next_f64() * 3.0));
                }
            }
        }
        let cut = CutFunction::new(g, edges).unwrap();
        let cov = CoverageFunction::new(
            g,
            (0..8).map(|_| seq.next_f64() + 0.1).collect(),
            (0..6)
                .map(|_| (0..8).filter(|_| seq.next_f64() < 0.4).collect())
                .collect(),
        )
        .unwrap();
        let fac = FacilityLocationFunction::new(
            g,
            (0..5)
                .map(|_| (0..6).map(|_| seq.next_f64()).collect())
                .collect(),
        )
        .unwrap();
        let modular = ModularFunction::new(g, vec![1.0, 3.0, 2.0, 0.5, 4.0, 0.0]).unwrap();
        let mut a = ElementSet::empty(g);
        let mut b = ElementSet::empty(g);
        for f in [
            &cut as &dyn SubmodularOracle,
            &cov,
            &fac,
            &modular,
        ] {
            for _ in 0..1000 {
                a.assign_mask(seq.next_u64());
                b.assign_mask(seq.next_u64());
                let lhs = f.evaluate(&a) + f.evaluate(&b);
                let rhs = f.evaluate(&a.union(&b)) + f.evaluate(&a.intersection(&b));
                assert!(lhs >= rhs - 1e-9, "submodularity violated: {lhs} < {rhs}");
            }
        }
    }
}
