//! The two kinds of bad configuration in an s-graph: pairs of edges sharing
//! at least `r` vertices, and minimal non-trivial r-covers of t-sets by
//! edges.

use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;

use crate::covers::{enumerate_minimal_nontrivial_covers, CoverFamily};
use crate::error::{Error, Result};
use crate::hypercore::{enumerate_cliques, is_subset, UniformHypergraph, VertexSet};

/// Edge indices keyed by the r-subsets they contain.
pub(crate) struct SubsetEdgeIndex<'a> {
    h: &'a UniformHypergraph,
    r: usize,
    by_subset: HashMap<VertexSet, Vec<usize>>,
}

impl<'a> SubsetEdgeIndex<'a> {
    pub(crate) fn new(h: &'a UniformHypergraph, r: usize) -> Self {
        let mut by_subset: HashMap<VertexSet, Vec<usize>> = HashMap::new();
        for (i, e) in h.edges().iter().enumerate() {
            for b in e.iter().copied().combinations(r) {
                by_subset.entry(b).or_default().push(i);
            }
        }
        Self { h, r, by_subset }
    }

    /// Edges sharing at least `r` vertices with `w`, ascending.
    pub(crate) fn edges_meeting(&self, w: &[u32]) -> Vec<usize> {
        let set: BTreeSet<usize> = w
            .iter()
            .copied()
            .combinations(self.r)
            .filter_map(|b| self.by_subset.get(&b))
            .flatten()
            .copied()
            .collect();
        set.into_iter().collect()
    }

    pub(crate) fn contained_in_edge(&self, w: &[u32]) -> bool {
        let first: VertexSet = w[..self.r].to_vec();
        self.by_subset
            .get(&first)
            .is_some_and(|ids| ids.iter().any(|&i| is_subset(w, &self.h.edges()[i])))
    }
}

fn check_r(h: &UniformHypergraph, r: usize) -> Result<()> {
    if r < 2 || r > h.k() {
        return Err(Error::param(format!(
            "need 2 <= r <= {}, got r = {r}",
            h.k()
        )));
    }
    Ok(())
}

fn check_rt(h: &UniformHypergraph, r: usize, t: usize) -> Result<()> {
    if !(r >= 2 && t > r && h.k() >= t) {
        return Err(Error::param(format!(
            "need s >= t > r >= 2, got s = {}, t = {t}, r = {r}",
            h.k()
        )));
    }
    Ok(())
}

/// Unordered pairs of edges meeting in at least `r` vertices, each pair
/// ordered `(smaller, larger)`, the list sorted.
pub fn linearity_violations(
    h: &UniformHypergraph,
    r: usize,
) -> Result<Vec<(VertexSet, VertexSet)>> {
    check_r(h, r)?;
    let index = SubsetEdgeIndex::new(h, r);
    let pairs: BTreeSet<(usize, usize)> = index
        .by_subset
        .values()
        .flat_map(|ids| ids.iter().copied().tuple_combinations::<(usize, usize)>())
        .collect();
    Ok(pairs
        .into_iter()
        .map(|(a, b)| (h.edges()[a].clone(), h.edges()[b].clone()))
        .collect())
}

pub fn is_r_linear(h: &UniformHypergraph, r: usize) -> Result<bool> {
    Ok(linearity_violations(h, r)?.is_empty())
}

/// Copies of `K_t^(r)` in the primal r-graph that lie in no single edge,
/// each with every minimal non-trivial cover of its vertex set by edges.
/// Empty exactly when `h` is (r, t)-conformal.
pub fn conformality_violations(
    h: &UniformHypergraph,
    r: usize,
    t: usize,
) -> Result<Vec<(VertexSet, CoverFamily)>> {
    cover_search(h, r, t, false)
}

/// Every minimal non-trivial r-cover by edges of every t-set, including
/// t-sets that some edge contains. These are the configurations the
/// cleaning step removes.
pub fn cover_configurations(
    h: &UniformHypergraph,
    r: usize,
    t: usize,
) -> Result<Vec<(VertexSet, CoverFamily)>> {
    cover_search(h, r, t, true)
}

fn cover_search(
    h: &UniformHypergraph,
    r: usize,
    t: usize,
    include_contained: bool,
) -> Result<Vec<(VertexSet, CoverFamily)>> {
    check_rt(h, r, t)?;
    let index = SubsetEdgeIndex::new(h, r);
    // a t-set with an r-cover by edges spans a clique of the primal graph
    let cliques = enumerate_cliques(&h.primal(r)?, t)?;
    let mut out = Vec::new();
    for w in cliques {
        if !include_contained && index.contained_in_edge(&w) {
            continue;
        }
        let candidates: Vec<VertexSet> = index
            .edges_meeting(&w)
            .into_iter()
            .map(|i| h.edges()[i].clone())
            .collect();
        for cover in enumerate_minimal_nontrivial_covers(&w, &candidates, r)? {
            out.push((w.clone(), cover));
        }
    }
    Ok(out)
}

/// Clique-based conformality check: every t-clique of the primal r-graph
/// lies inside one edge. Does not use the cover machinery.
pub fn is_conformal(h: &UniformHypergraph, r: usize, t: usize) -> Result<bool> {
    check_rt(h, r, t)?;
    let cliques = enumerate_cliques(&h.primal(r)?, t)?;
    Ok(cliques
        .iter()
        .all(|w| h.edges().iter().any(|e| is_subset(w, e))))
}
