#![allow(dead_code)]

use rand_core::RngCore;
use rmqkit::dataset::{generate, Distribution};
use rmqkit::query_stream::rng;
use rmqkit::{Element, Universe};

/// Uniform values over the default universe (sentinel excluded).
pub fn wide_values(n: usize, seed: u64) -> Vec<Element> {
    generate(n, Distribution::Uniform, seed, Universe::default()).unwrap()
}

/// Values in `0..range`, so ties are frequent.
pub fn narrow_values(n: usize, seed: u64, range: u64) -> Vec<Element> {
    let mut r = rng(seed);
    (0..n).map(|_| (r.next_u64() % range) as Element).collect()
}

/// Both flavours, for exhaustive sweeps.
pub fn value_sets(n: usize, seed: u64) -> Vec<Vec<Element>> {
    vec![
        wide_values(n, seed),
        narrow_values(n, seed ^ 0x5555, 4),
        (0..n as Element).collect(),
        (0..n as Element).rev().collect(),
    ]
}

pub const TOWERS: [usize; 4] = [2, 4, 16, 256];
