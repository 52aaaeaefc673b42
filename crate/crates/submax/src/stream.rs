//! Deterministic counter-based random streams.
//!
//! Every stochastic operation in the crate draws from a [`RandomStream`]
//! identified by `(master_seed, stream_id)`. Logical sampling sites derive
//! child streams from structured tags (phase, step index, element id, sample
//! index), so results do not depend on evaluation order and parallel
//! evaluation would reproduce sequential output bit for bit.
//!
//! The generator is a keyed splitmix64 counter: output `k` of a stream is a
//! finalizer applied to `key + k`, which makes random access and stream
//! splitting free.

use crate::ground::{ElementSet, FractionalPoint};
use serde::{Deserialize, Serialize};

/// Tags namespacing the top-level sampling sites.
pub mod phase {
    pub const SOLVER_STEP: u64 = 1;
    pub const ESTIMATE: u64 = 2;
    pub const MONITOR: u64 = 3;
    pub const ROUNDING: u64 = 4;
    pub const VERIFY: u64 = 5;
}

#[inline]
fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A named random stream. Equal `(master_seed, stream_id)` pairs produce
/// identical sequences; distinct ids produce statistically independent ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomStream {
    master_seed: u64,
    stream_id: u64,
}

impl RandomStream {
    pub fn new(master_seed: u64) -> Self {
        RandomStream {
            master_seed,
            stream_id: 0,
        }
    }

    pub fn master_seed(&self) -> u64 {
        self.master_seed
    }

    pub fn stream_id(&self) -> u64 {
        self.stream_id
    }

    /// Derives a child stream from an ordered tag list.
    pub fn derive(&self, tags: &[u64]) -> Self {
        let mut id = self.stream_id;
        for &t in tags {
            id = splitmix64(id.wrapping_mul(0x0100_0000_01B3).wrapping_add(t));
        }
        RandomStream {
            master_seed: self.master_seed,
            stream_id: id,
        }
    }

    /// Starts drawing from the stream.
    pub fn sequence(&self) -> StreamSequence {
        StreamSequence {
            key: splitmix64(self.master_seed ^ splitmix64(self.stream_id)),
            counter: 0,
        }
    }
}

/// Iterator state over one stream's outputs.
#[derive(Debug, Clone)]
pub struct StreamSequence {
    key: u64,
    counter: u64,
}

impl StreamSequence {
    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        let v = splitmix64(self.key.wrapping_add(self.counter));
        self.counter = self.counter.wrapping_add(1);
        v
    }

    /// Uniform draw from `[0, 1)` with 53 bits of precision.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in `[0, bound)` (rejection-free modulo; fine for the
    /// desk-scale instance generators that use it).
    pub fn next_below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        self.next_u64() % bound
    }
}

/// Draws a random set containing each element `i` independently with
/// probability `y_i`. Deterministic given the stream.
pub fn sample_random_set(y: &FractionalPoint, stream: &RandomStream) -> ElementSet {
    let mut out = ElementSet::empty(crate::ground::GroundSet::new(y.len()).expect("nonempty"));
    sample_random_set_into(y, stream, usize::MAX, &mut out);
    out
}

/// In-place variant of [`sample_random_set`] that additionally forces
/// `excluded` out of the sample (pass `usize::MAX` to exclude nothing).
/// Draws one uniform per coordinate regardless, so the consumed stream
/// positions match the plain sampler.
#[inline]
pub(crate) fn sample_random_set_into(
    y: &FractionalPoint,
    stream: &RandomStream,
    excluded: usize,
    out: &mut ElementSet,
) {
    let mut seq = stream.sequence();
    out.clear();
    for (i, &p) in y.coords().iter().enumerate() {
        let u = seq.next_f64();
        if i != excluded && u < p {
            out.insert(i);
        }
    }
}
