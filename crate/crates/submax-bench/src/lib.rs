//! Shared fixtures for the criterion benchmarks.

use submax::{CutFunction, GroundSet, RandomStream};

/// Deterministic random weighted cut on `n` vertices, edge density ~0.5.
pub fn random_cut(n: usize, seed: u64) -> CutFunction {
    let ground = GroundSet::new(n).unwrap();
    let mut seq = RandomStream::new(seed).sequence();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if seq.next_f64() < 0.5 {
                edges.push((i, j, 0.5 + 2.0 * seq.next_f64()));
            }
        }
    }
    CutFunction::new(ground, edges).unwrap()
}
