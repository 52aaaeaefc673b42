//! Exhaustive reference oracles that ground-truth every probabilistic or
//! approximate result at desk scale.

use crate::error::{Error, Result};
use crate::functions::SubmodularOracle;
use crate::ground::ElementSet;
use crate::matroids::MatroidOracle;
use crate::stream::{phase, RandomStream};
use serde::{Deserialize, Serialize};

/// Hard cap on `n` for exhaustive optimization (about a million oracle
/// calls, seconds at desk scale).
pub const BRUTE_FORCE_LIMIT: usize = 20;

/// Result of exhaustive constrained maximization.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BruteForceResult {
    pub opt_set: Vec<usize>,
    pub opt_value: f64,
    /// Number of independent sets examined.
    pub enumerated_count: u64,
}

/// True if `a` precedes `b` lexicographically as sorted element lists.
fn lex_smaller(a: &ElementSet, b: &ElementSet) -> bool {
    let mut ia = a.iter();
    let mut ib = b.iter();
    loop {
        match (ia.next(), ib.next()) {
            (Some(x), Some(y)) if x == y => continue,
            (Some(x), Some(y)) => return x < y,
            (None, Some(_)) => return true,
            _ => return false,
        }
    }
}

/// Exhaustive scan of all subsets, keeping the best independent one. Ties
/// break toward the lexicographically smallest optimal set.
pub fn brute_force_opt(
    f: &dyn SubmodularOracle,
    matroid: &dyn MatroidOracle,
) -> Result<BruteForceResult> {
    let ground = f.ground();
    let n = ground.size();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::GroundSetTooLarge {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let mut best_set = ElementSet::empty(ground);
    let mut best_value = f64::NEG_INFINITY;
    let mut enumerated = 0u64;
    let mut subset = ElementSet::empty(ground);
    for mask in 0u64..(1u64 << n) {
        subset.assign_mask(mask);
        if !matroid.is_independent(&subset) {
            continue;
        }
        enumerated += 1;
        let value = f.evaluate(&subset);
        if value > best_value || (value == best_value && lex_smaller(&subset, &best_set)) {
            best_value = value;
            best_set = subset.clone();
        }
    }
    Ok(BruteForceResult {
        opt_set: best_set.to_vec(),
        opt_value: best_value,
        enumerated_count: enumerated,
    })
}

/// Checks `f(A) + f(B) >= f(A u B) + f(A n B)` within 1e-9: exhaustively over
/// all pairs when `n <= 12` (via a full value table), otherwise on 1000
/// deterministic random pairs.
pub fn verify_submodularity(f: &dyn SubmodularOracle) -> bool {
    let ground = f.ground();
    let n = ground.size();
    if n <= 12 {
        let size = 1usize << n;
        let mut table = Vec::with_capacity(size);
        let mut s = ElementSet::empty(ground);
        for mask in 0..size as u64 {
            s.assign_mask(mask);
            table.push(f.evaluate(&s));
        }
        for a in 0..size {
            for b in a..size {
                if table[a] + table[b] < table[a | b] + table[a & b] - 1e-9 {
                    return false;
                }
            }
        }
        true
    } else {
        let mut seq = RandomStream::new(0).derive(&[phase::VERIFY]).sequence();
        let mut a = ElementSet::empty(ground);
        let mut b = ElementSet::empty(ground);
        for _ in 0..1000 {
            for set in [&mut a, &mut b] {
                set.clear();
                for i in 0..n {
                    if seq.next_f64() < 0.5 {
                        set.insert(i);
                    }
                }
            }
            let lhs = f.evaluate(&a) + f.evaluate(&b);
            let rhs = f.evaluate(&a.union(&b)) + f.evaluate(&a.intersection(&b));
            if lhs < rhs - 1e-9 {
                return false;
            }
        }
        true
    }
}
