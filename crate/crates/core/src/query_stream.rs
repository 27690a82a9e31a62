//! Seeded stream of query ranges shared by every implementation.
//!
//! The generator is SplitMix64 with its 64-bit state initialised to the seed:
//! each step adds `0x9E3779B97F4A7C15` to the state and mixes it with
//! `z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27; z *= 0x94D049BB133111EB;
//! z ^= z >> 31`. A range is drawn by taking one output modulo
//! `T = n(n+1)/2` and unranking it: rank `k` maps to `(i, j)` with
//! `j(j+1)/2 ≤ k < (j+1)(j+2)/2` and `i = k − j(j+1)/2`. Every `i ≤ j` pair is
//! therefore (up to modulo bias below `2^-20` for `n ≤ 2^22`) equally likely.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

/// The stream's generator, seeded so that its state equals `seed`.
pub fn rng(seed: u64) -> SplitMix64 {
    SplitMix64::from_seed(seed.to_le_bytes())
}

/// Infinite iterator of uniformly distributed `(i, j)` pairs with
/// `0 ≤ i ≤ j < n`.
#[derive(Debug, Clone)]
pub struct QueryStream {
    rng: SplitMix64,
    pairs: u128,
}

impl QueryStream {
    /// `n` must be positive.
    pub fn new(n: usize, seed: u64) -> Self {
        assert!(n > 0, "query stream over an empty sequence");
        let n = n as u128;
        Self {
            rng: rng(seed),
            pairs: n * (n + 1) / 2,
        }
    }
}

impl Iterator for QueryStream {
    type Item = (usize, usize);

    fn next(&mut self) -> Option<(usize, usize)> {
        let k = self.rng.next_u64() as u128 % self.pairs;
        Some(unrank_pair(k))
    }
}

/// Inverse of `rank(i, j) = j(j+1)/2 + i`.
pub fn unrank_pair(k: u128) -> (usize, usize) {
    let mut j = ((8 * k + 1).isqrt() - 1) / 2;
    // isqrt is exact, but keep the bracket explicit
    while j * (j + 1) / 2 > k {
        j -= 1;
    }
    while (j + 1) * (j + 2) / 2 <= k {
        j += 1;
    }
    let i = k - j * (j + 1) / 2;
    (i as usize, j as usize)
}
