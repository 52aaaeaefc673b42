//! Ground set, subset and fractional-point primitives.
//!
//! Every oracle in this crate works over a dense ground set `{0, .., n-1}`.
//! Subsets are machine-word bitsets so that the exhaustive reference oracles
//! can enumerate millions of them cheaply; fractional points are coordinate
//! vectors kept inside `[0, 1]` by clamping after every arithmetic update.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Dense ground set of size `n` with stable element ids `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroundSet {
    n: usize,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        Ok(GroundSet { n })
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn check_element(&self, element: usize) -> Result<()> {
        if element >= self.n {
            return Err(Error::ElementOutOfRange { element, n: self.n });
        }
        Ok(())
    }
}

/// A subset of the ground set, backed by one machine word per 64 elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    n: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(ground: GroundSet) -> Self {
        let n = ground.size();
        ElementSet {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(ground: GroundSet) -> Self {
        let mut set = Self::empty(ground);
        for i in 0..set.n {
            set.insert(i);
        }
        set
    }

    pub fn singleton(ground: GroundSet, element: usize) -> Self {
        let mut set = Self::empty(ground);
        set.insert(element);
        set
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(ground: GroundSet, elements: I) -> Self {
        let mut set = Self::empty(ground);
        for e in elements {
            set.insert(e);
        }
        set
    }

    /// Builds a set from the low `n` bits of `mask` (requires `n <= 64`).
    pub fn from_mask(ground: GroundSet, mask: u64) -> Self {
        let mut set = Self::empty(ground);
        set.assign_mask(mask);
        set
    }

    /// Overwrites the set with the low `n` bits of `mask` (requires `n <= 64`).
    #[inline]
    pub fn assign_mask(&mut self, mask: u64) {
        debug_assert!(self.n <= 64);
        let keep = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        self.words[0] = mask & keep;
    }

    #[inline]
    pub fn ground_size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, element: usize) -> bool {
        debug_assert!(element < self.n);
        (self.words[element >> 6] >> (element & 63)) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, element: usize) {
        debug_assert!(element < self.n);
        self.words[element >> 6] |= 1u64 << (element & 63);
    }

    #[inline]
    pub fn remove(&mut self, element: usize) {
        debug_assert!(element < self.n);
        self.words[element >> 6] &= !(1u64 << (element & 63));
    }

    #[inline]
    pub fn clear(&mut self) {
        self.words.fill(0);
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn with(&self, element: usize) -> Self {
        let mut out = self.clone();
        out.insert(element);
        out
    }

    pub fn without(&self, element: usize) -> Self {
        let mut out = self.clone();
        out.remove(element);
        out
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        ElementSet { n: self.n, words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        ElementSet { n: self.n, words }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Iterates members in ascending id order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + bit)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// A point in `[0, 1]^n`, the evolving relaxed solution.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FractionalPoint {
    coords: Vec<f64>,
}

impl FractionalPoint {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyGroundSet);
        }
        for (i, &c) in coords.iter().enumerate() {
            if !(0.0..=1.0).contains(&c) {
                return Err(Error::InvalidConfig(format!(
                    "coordinate {i} = {c} outside [0, 1]"
                )));
            }
        }
        Ok(FractionalPoint { coords })
    }

    pub fn zeros(ground: GroundSet) -> Self {
        FractionalPoint {
            coords: vec![0.0; ground.size()],
        }
    }

    pub fn indicator(set: &ElementSet) -> Self {
        let mut coords = vec![0.0; set.ground_size()];
        for i in set.iter() {
            coords[i] = 1.0;
        }
        FractionalPoint { coords }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    #[inline]
    pub fn get(&self, element: usize) -> f64 {
        self.coords[element]
    }

    /// Sets a coordinate, clamping into `[0, 1]` against floating drift.
    #[inline]
    pub fn set(&mut self, element: usize, value: f64) {
        self.coords[element] = value.clamp(0.0, 1.0);
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn max_coord(&self) -> f64 {
        self.coords.iter().cloned().fold(0.0, f64::max)
    }

    /// Coordinate-wise maximum with the incidence vector of `set`.
    pub fn join_with_indicator(&self, set: &ElementSet) -> Self {
        debug_assert_eq!(self.len(), set.ground_size());
        let mut out = self.clone();
        for i in set.iter() {
            out.coords[i] = 1.0;
        }
        out
    }
}

/// Free-function form of [`FractionalPoint::join_with_indicator`].
pub fn join_with_indicator(y: &FractionalPoint, set: &ElementSet) -> FractionalPoint {
    y.join_with_indicator(set)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ground(n: usize) -> GroundSet {
        GroundSet::new(n).unwrap()
    }

    #[test]
    fn ground_set_rejects_empty() {
        assert!(GroundSet::new(0).is_err());
    }

    #[test]
    fn bitset_roundtrip() {
        let g = ground(130);
        let mut s = ElementSet::empty(g);
        for i in [0, 63, 64, 127, 129] {
            s.insert(i);
        }
        assert_eq!(s.len(), 5);
        assert_eq!(s.to_vec(), vec![0, 63, 64, 127, 129]);
        s.remove(64);
        assert!(!s.contains(64));
        assert_eq!(s.len(), 4);
    }

    #[test]
    fn mask_assignment_truncates() {
        let g = ground(5);
        let s = ElementSet::from_mask(g, 0b1110_0101);
        assert_eq!(s.to_vec(), vec![0, 2]);
    }

    #[test]
    fn join_identity_on_empty_set() {
        let g = ground(3);
        let y = FractionalPoint::new(vec![0.2, 0.7, 0.4]).unwrap();
        let joined = y.join_with_indicator(&ElementSet::empty(g));
        assert_eq!(joined, y);
    }

    #[test]
    fn join_zero_vector_gives_indicator() {
        let g = ground(4);
        let y = FractionalPoint::zeros(g);
        let joined = y.join_with_indicator(&ElementSet::singleton(g, 2));
        assert_eq!(joined.coords(), &[0.0, 0.0, 1.0, 0.0]);
    }

    #[test]
    fn join_takes_coordinate_max() {
        let g = ground(2);
        let y = FractionalPoint::new(vec![0.3, 0.9]).unwrap();
        let joined = y.join_with_indicator(&ElementSet::singleton(g, 0));
        assert_eq!(joined.coords(), &[1.0, 0.9]);
    }

    #[test]
    fn set_clamps_drift() {
        let g = ground(1);
        let mut y = FractionalPoint::zeros(g);
        y.set(0, 1.0 + 1e-16);
        assert_eq!(y.get(0), 1.0);
        y.set(0, -1e-16);
        assert_eq!(y.get(0), 0.0);
    }

    #[test]
    fn fractional_point_validates_range() {
        assert!(FractionalPoint::new(vec![0.5, 1.2]).is_err());
        assert!(FractionalPoint::new(vec![-0.1]).is_err());
    }
}
