//! The binomial random s-graph `H(n, s, p)`.
//!
//! Two paths produce the same distribution. The dense path walks all
//! `C(n, s)` candidate edges in lexicographic order and keeps each with
//! probability `p`. The sparse path draws the edge count from
//! `Binomial(C(n, s), p)` and then picks that many distinct s-sets uniformly;
//! conditioned on the count, the kept set is uniform among sets of that size,
//! which is exactly the law of the independent model.
//!
//! Randomness comes from ChaCha8 seeded through `seed_from_u64`, which is
//! specified bit-for-bit and platform independent.

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution};

use crate::error::{Error, Result};
use crate::hypercore::{binomial_u128, UniformHypergraph, Vertex, VertexSet};

#[derive(Clone, Debug)]
pub struct SamplerConfig {
    /// Use the sparse path when the expected edge count is at most this.
    pub sparse_threshold: f64,
    /// Largest candidate count the dense path will walk.
    pub dense_limit: u128,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        Self {
            sparse_threshold: 1e6,
            dense_limit: 50_000_000,
        }
    }
}

pub fn sample_hypergraph(n: usize, s: usize, p: f64, seed: u64) -> Result<UniformHypergraph> {
    sample_hypergraph_with(n, s, p, seed, &SamplerConfig::default())
}

pub fn sample_hypergraph_with(
    n: usize,
    s: usize,
    p: f64,
    seed: u64,
    config: &SamplerConfig,
) -> Result<UniformHypergraph> {
    if s < 2 || n < s {
        return Err(Error::param(format!(
            "sampling needs n >= s >= 2, got n = {n}, s = {s}"
        )));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::param(format!("probability {p} outside [0, 1]")));
    }
    let candidates = binomial_u128(n as u64, s as u64)
        .ok_or_else(|| Error::param("C(n, s) does not fit in 128 bits"))?;
    if p == 0.0 {
        return UniformHypergraph::empty(n, s);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let expected = p * candidates as f64;
    let sparse_ok = candidates <= u64::MAX as u128 && p <= 0.5;
    if sparse_ok && (expected <= config.sparse_threshold || candidates > config.dense_limit) {
        if expected > config.sparse_threshold.max(1e8) {
            return Err(Error::param(format!(
                "expected {expected:.3e} edges; too many to materialize"
            )));
        }
        return Ok(sample_sparse(n, s, p, candidates as u64, &mut rng));
    }
    if candidates > config.dense_limit {
        return Err(Error::param(format!(
            "{candidates} candidate edges at p = {p}; too many to sample"
        )));
    }
    Ok(sample_dense(n, s, p, &mut rng))
}

fn sample_dense(n: usize, s: usize, p: f64, rng: &mut ChaCha8Rng) -> UniformHypergraph {
    let edges: Vec<VertexSet> = (1..=n as Vertex)
        .combinations(s)
        .filter(|_| rng.random::<f64>() < p)
        .collect();
    UniformHypergraph::from_sorted_unchecked(n, s, edges)
}

fn sample_sparse(
    n: usize,
    s: usize,
    p: f64,
    candidates: u64,
    rng: &mut ChaCha8Rng,
) -> UniformHypergraph {
    let count = Binomial::new(candidates, p)
        .expect("p checked to lie in [0, 1]")
        .sample(rng);
    let mut edges = BTreeSet::new();
    while (edges.len() as u64) < count {
        let mut edge: VertexSet = index::sample(rng, n, s)
            .into_iter()
            .map(|i| i as Vertex + 1)
            .collect();
        edge.sort_unstable();
        edges.insert(edge);
    }
    UniformHypergraph::from_sorted_unchecked(n, s, edges.into_iter().collect())
}

/// SplitMix64 finalizer; derives the seed of trial `index` from a master
/// seed.
pub fn trial_seed(master_seed: u64, index: u64) -> u64 {
    fn mix(mut z: u64) -> u64 {
        z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
    mix(master_seed ^ mix(index))
}
