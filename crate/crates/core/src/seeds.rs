//! Deterministic seed derivation.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::LabeledGraph;

pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// The `index`-th seed of a family rooted at `base`; index 0 is `base`.
pub fn derive_seed(base: u64, index: u64) -> u64 {
    if index == 0 {
        base
    } else {
        splitmix64(base ^ splitmix64(index))
    }
}

/// Counter-based generator keyed by a seed and the graph it randomizes.
pub fn graph_rng(seed: u64, g: &LabeledGraph) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(splitmix64(seed) ^ g.fingerprint())
}
