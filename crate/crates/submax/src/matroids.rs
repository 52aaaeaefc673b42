//! Matroid independence oracles, rank, and polytope membership checks.

use crate::error::{Error, Result};
use crate::ground::{ElementSet, FractionalPoint, GroundSet};
use serde::{Deserialize, Serialize};
use std::sync::atomic::{AtomicU64, Ordering};

/// Matroid classes with closed-form polytope descriptions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatroidKind {
    Uniform,
    Partition,
    Graphic,
}

/// Black-box independence oracle for a matroid over the ground set.
pub trait MatroidOracle: Send + Sync {
    fn ground(&self) -> GroundSet;
    fn kind(&self) -> MatroidKind;
    fn is_independent(&self, set: &ElementSet) -> bool;

    /// Checks `y` against the matroid polytope's rank constraints up to `tol`.
    /// Kinds without a closed-form description return an error.
    fn polytope_membership(&self, y: &FractionalPoint, tol: f64) -> Result<bool> {
        let _ = (y, tol);
        Err(Error::UnsupportedMembership(self.kind()))
    }
}

/// Independence = cardinality at most `k`.
#[derive(Debug, Clone)]
pub struct UniformMatroid {
    ground: GroundSet,
    k: usize,
}

impl UniformMatroid {
    pub fn new(ground: GroundSet, k: usize) -> Self {
        UniformMatroid { ground, k }
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

impl MatroidOracle for UniformMatroid {
    fn ground(&self) -> GroundSet {
        self.ground
    }

    fn kind(&self) -> MatroidKind {
        MatroidKind::Uniform
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        set.len() <= self.k
    }

    fn polytope_membership(&self, y: &FractionalPoint, tol: f64) -> Result<bool> {
        let total: f64 = y.coords().iter().sum();
        Ok(total <= self.k as f64 + tol)
    }
}

/// Independence = every part's member count within its capacity.
#[derive(Debug, Clone)]
pub struct PartitionMatroid {
    ground: GroundSet,
    parts: Vec<usize>,
    capacities: Vec<usize>,
}

impl PartitionMatroid {
    pub fn new(ground: GroundSet, parts: Vec<usize>, capacities: Vec<usize>) -> Result<Self> {
        if parts.len() != ground.size() {
            return Err(Error::InvalidInstance(format!(
                "expected {} part assignments, got {}",
                ground.size(),
                parts.len()
            )));
        }
        for (i, &p) in parts.iter().enumerate() {
            if p >= capacities.len() {
                return Err(Error::InvalidInstance(format!(
                    "element {i} assigned to part {p}, but only {} capacities given",
                    capacities.len()
                )));
            }
        }
        Ok(PartitionMatroid {
            ground,
            parts,
            capacities,
        })
    }
}

impl MatroidOracle for PartitionMatroid {
    fn ground(&self) -> GroundSet {
        self.ground
    }

    fn kind(&self) -> MatroidKind {
        MatroidKind::Partition
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        let mut counts = vec![0usize; self.capacities.len()];
        for e in set.iter() {
            let p = self.parts[e];
            counts[p] += 1;
            if counts[p] > self.capacities[p] {
                return false;
            }
        }
        true
    }

    fn polytope_membership(&self, y: &FractionalPoint, tol: f64) -> Result<bool> {
        let mut sums = vec![0.0f64; self.capacities.len()];
        for (e, &c) in y.coords().iter().enumerate() {
            sums[self.parts[e]] += c;
        }
        Ok(sums
            .iter()
            .zip(&self.capacities)
            .all(|(&s, &cap)| s <= cap as f64 + tol))
    }
}

/// Elements are edges of a multigraph; independence = the edge set is a
/// forest. Each `is_independent` call rebuilds a union-find from scratch so
/// the oracle stays stateless and one query costs one call.
#[derive(Debug, Clone)]
pub struct GraphicMatroid {
    ground: GroundSet,
    vertices: usize,
    edges: Vec<(u32, u32)>,
}

impl GraphicMatroid {
    pub fn new(ground: GroundSet, vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if edges.len() != ground.size() {
            return Err(Error::InvalidInstance(format!(
                "expected {} edges, got {}",
                ground.size(),
                edges.len()
            )));
        }
        if vertices == 0 {
            return Err(Error::InvalidInstance("graph needs at least one vertex".into()));
        }
        let mut compact = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u >= vertices || v >= vertices {
                return Err(Error::InvalidInstance(format!(
                    "edge ({u}, {v}) outside vertex range 0..{vertices}"
                )));
            }
            if u == v {
                return Err(Error::InvalidInstance(format!("self loop at vertex {u}")));
            }
            compact.push((u as u32, v as u32));
        }
        Ok(GraphicMatroid {
            ground,
            vertices,
            edges: compact,
        })
    }
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    /// Returns false if `a` and `b` were already connected.
    fn union(&mut self, a: u32, b: u32) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        self.parent[ra as usize] = rb;
        true
    }
}

impl MatroidOracle for GraphicMatroid {
    fn ground(&self) -> GroundSet {
        self.ground
    }

    fn kind(&self) -> MatroidKind {
        MatroidKind::Graphic
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        let mut uf = UnionFind::new(self.vertices);
        for e in set.iter() {
            let (u, v) = self.edges[e];
            if !uf.union(u, v) {
                return false;
            }
        }
        true
    }

    fn polytope_membership(&self, y: &FractionalPoint, tol: f64) -> Result<bool> {
        // Forest polytope: for every vertex subset W with |W| >= 2, the mass
        // on edges with both endpoints inside W is at most |W| - 1.
        if self.vertices > 16 {
            return Err(Error::GroundSetTooLarge {
                n: self.vertices,
                limit: 16,
            });
        }
        for w_mask in 1u32..(1 << self.vertices) {
            if w_mask.count_ones() < 2 {
                continue;
            }
            let mut inside = 0.0;
            for (e, &(u, v)) in self.edges.iter().enumerate() {
                if (w_mask >> u) & 1 == 1 && (w_mask >> v) & 1 == 1 {
                    inside += y.get(e);
                }
            }
            if inside > (w_mask.count_ones() as f64 - 1.0) + tol {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Wrapper counting independence-oracle calls exactly; polytope membership
/// checks are verification devices and are not counted.
pub struct CountingMatroid<'a> {
    inner: &'a dyn MatroidOracle,
    calls: AtomicU64,
}

impl<'a> CountingMatroid<'a> {
    pub fn new(inner: &'a dyn MatroidOracle) -> Self {
        CountingMatroid {
            inner,
            calls: AtomicU64::new(0),
        }
    }

    pub fn calls(&self) -> u64 {
        self.calls.load(Ordering::Relaxed)
    }
}

impl MatroidOracle for CountingMatroid<'_> {
    fn ground(&self) -> GroundSet {
        self.inner.ground()
    }

    fn kind(&self) -> MatroidKind {
        self.inner.kind()
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        self.calls.fetch_add(1, Ordering::Relaxed);
        self.inner.is_independent(set)
    }

    fn polytope_membership(&self, y: &FractionalPoint, tol: f64) -> Result<bool> {
        self.inner.polytope_membership(y, tol)
    }
}

/// Size of a maximum independent set, found by one greedy pass over the
/// ground set. Uses exactly `n` independence-oracle calls.
pub fn rank(matroid: &dyn MatroidOracle) -> usize {
    let ground = matroid.ground();
    let mut current = ElementSet::empty(ground);
    for i in 0..ground.size() {
        current.insert(i);
        if !matroid.is_independent(&current) {
            current.remove(i);
        }
    }
    current.len()
}

/// Default tolerance for polytope membership checks.
pub const MEMBERSHIP_TOL: f64 = 1e-9;

/// Free-function form of [`MatroidOracle::polytope_membership`].
pub fn polytope_membership(
    matroid: &dyn MatroidOracle,
    y: &FractionalPoint,
    tol: f64,
) -> Result<bool> {
    matroid.polytope_membership(y, tol)
}
