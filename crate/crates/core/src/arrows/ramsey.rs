//! Small Ramsey numbers over complete hosts, and the base coloring used by
//! the lift.
//!
//! Every r-graph on `n` vertices sits inside `K_n^(r)`, and a good coloring
//! of the complete host restricts to a good coloring of any sub-hypergraph,
//! so the least `n` with `K_n^(r)` arrowing the targets is the Ramsey number.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::search::{arrows_decision, Budget, Verdict};
use super::TargetList;
use crate::error::{Error, Result};
use crate::hypercore::{EdgeColoring, UniformHypergraph};

/// Least `n <= n_max` such that `K_n^(r)` arrows `targets`.
pub fn ramsey_number(targets: &TargetList, n_max: usize, budget: Budget) -> Result<usize> {
    let r = targets.r();
    // K_n with n < max t_i has no clique of that color's size, hence never arrows
    let start = targets.sizes().iter().copied().min().unwrap_or(r).max(r);
    for n in start..=n_max {
        let host = UniformHypergraph::complete(n, r)?;
        if arrows_decision(&host, targets, budget)?.verdict == Verdict::Arrows {
            return Ok(n);
        }
    }
    Err(Error::NotFound { n_max })
}

type CacheKey = (usize, usize, Vec<usize>);

fn cache() -> &'static Mutex<HashMap<CacheKey, Option<EdgeColoring>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Option<EdgeColoring>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// A good coloring of `K_s^(r)` on `[1, s]`, found by search and cached per
/// `(s, targets)`. Fails with [`Error::NoneExists`] when `K_s^(r)` arrows the
/// targets.
pub fn base_coloring_search(s: usize, targets: &TargetList) -> Result<EdgeColoring> {
    let r = targets.r();
    if s < r {
        return Err(Error::param(format!("need s >= r, got s = {s}, r = {r}")));
    }
    let key = (s, r, targets.sizes().to_vec());
    if let Some(hit) = cache().lock().expect("cache poisoned").get(&key) {
        return hit.clone().ok_or(Error::NoneExists { s });
    }
    let host = UniformHypergraph::complete(s, r)?;
    let result = arrows_decision(&host, targets, Budget::unlimited())?;
    let found = match result.verdict {
        Verdict::Arrows => None,
        Verdict::NotArrows => result.witness,
    };
    cache()
        .lock()
        .expect("cache poisoned")
        .insert(key, found.clone());
    found.ok_or(Error::NoneExists { s })
}
