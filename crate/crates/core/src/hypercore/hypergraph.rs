use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// 1-based vertex index.
pub type Vertex = u32;

/// Strictly ascending list of vertices.
pub type VertexSet = Vec<Vertex>;

/// A k-uniform hypergraph on the vertex set `1..=n`.
///
/// Edges are kept sorted (each edge ascending, the edge list in lexicographic
/// order) and free of duplicates, so two hypergraphs with the same edge set
/// compare equal and edge lookups are binary searches. Isolated vertices are
/// representable because `n` is stored explicitly.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UniformHypergraph {
    n: usize,
    k: usize,
    edges: Vec<VertexSet>,
}

impl UniformHypergraph {
    /// Builds a hypergraph from arbitrary-order edges. Each edge is sorted;
    /// repeated vertices, out-of-range vertices, wrong arity and duplicate
    /// edges are rejected.
    pub fn new(n: usize, k: usize, edges: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        check_uniformity(k)?;
        let mut out = Vec::new();
        for mut edge in edges {
            edge.sort_unstable();
            validate_edge(n, k, &edge)?;
            out.push(edge);
        }
        out.sort_unstable();
        if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::param(format!("duplicate edge {:?}", w[0])));
        }
        Ok(Self { n, k, edges: out })
    }

    /// Builds a hypergraph from edges that may repeat; duplicates are merged.
    pub fn from_edge_union(
        n: usize,
        k: usize,
        edges: impl IntoIterator<Item = VertexSet>,
    ) -> Result<Self> {
        check_uniformity(k)?;
        let mut set = BTreeSet::new();
        for mut edge in edges {
            edge.sort_unstable();
            validate_edge(n, k, &edge)?;
            set.insert(edge);
        }
        Ok(Self {
            n,
            k,
            edges: set.into_iter().collect(),
        })
    }

    pub(crate) fn from_sorted_unchecked(n: usize, k: usize, edges: Vec<VertexSet>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        Self { n, k, edges }
    }

    pub fn empty(n: usize, k: usize) -> Result<Self> {
        check_uniformity(k)?;
        Ok(Self {
            n,
            k,
            edges: Vec::new(),
        })
    }

    /// The complete k-graph `K_n^(k)`.
    pub fn complete(n: usize, k: usize) -> Result<Self> {
        check_uniformity(k)?;
        let edges = (1..=n as Vertex).combinations(k).collect();
        Ok(Self { n, k, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edge_index(&self, edge: &[Vertex]) -> Option<usize> {
        self.edges.binary_search_by(|e| e.as_slice().cmp(edge)).ok()
    }

    pub fn contains_edge(&self, edge: &[Vertex]) -> bool {
        self.edge_index(edge).is_some()
    }

    /// True when every edge of `self` is an edge of `other` and both share
    /// `n` and `k`.
    pub fn is_subgraph_of(&self, other: &Self) -> bool {
        self.n == other.n && self.k == other.k && self.edges.iter().all(|e| other.contains_edge(e))
    }

    /// Vertices of nonzero degree, ascending.
    pub fn non_isolated_vertices(&self) -> VertexSet {
        let set: BTreeSet<Vertex> = self.edges.iter().flatten().copied().collect();
        set.into_iter().collect()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges
            .iter()
            .filter(|e| e.binary_search(&v).is_ok())
            .count()
    }

    /// Sub-hypergraph on the same vertex set keeping only edges for which
    /// `keep` returns true.
    pub fn filter_edges(&self, mut keep: impl FnMut(&[Vertex]) -> bool) -> Self {
        Self {
            n: self.n,
            k: self.k,
            edges: self.edges.iter().filter(|e| keep(e)).cloned().collect(),
        }
    }

    /// The sub-hypergraph induced on `vertices` (which must be ascending).
    /// Vertex labels are preserved.
    pub fn induced(&self, vertices: &[Vertex]) -> Self {
        self.filter_edges(|e| is_subset(e, vertices))
    }

    /// The primal r-graph: all r-subsets of edges, deduplicated, on the same
    /// vertex set.
    pub fn primal(&self, r: usize) -> Result<Self> {
        if r < 2 || r > self.k {
            return Err(Error::param(format!(
                "primal r-graph needs 2 <= r <= {}, got r = {r}",
                self.k
            )));
        }
        let set: BTreeSet<VertexSet> = self
            .edges
            .iter()
            .flat_map(|e| e.iter().copied().combinations(r))
            .collect();
        Ok(Self {
            n: self.n,
            k: r,
            edges: set.into_iter().collect(),
        })
    }
}

impl fmt::Display for UniformHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}-graph on {} vertices with {} edges",
            self.k,
            self.n,
            self.edges.len()
        )
    }
}

/// Free-function form of [`UniformHypergraph::primal`].
pub fn primal_r_graph(h: &UniformHypergraph, r: usize) -> Result<UniformHypergraph> {
    h.primal(r)
}

fn check_uniformity(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::param(format!(
            "uniformity must be at least 2, got {k}"
        )));
    }
    Ok(())
}

fn validate_edge(n: usize, k: usize, edge: &[Vertex]) -> Result<()> {
    if edge.len() != k {
        return Err(Error::param(format!(
            "edge {edge:?} has {} vertices, expected {k}",
            edge.len()
        )));
    }
    if let Some(w) = edge.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::param(format!(
            "edge {edge:?} repeats vertex {}",
            w[0]
        )));
    }
    if let Some(&v) = edge.iter().find(|&&v| v == 0 || v as usize > n) {
        return Err(Error::param(format!("vertex {v} outside 1..={n}")));
    }
    Ok(())
}

/// Subset test for two ascending slices.
pub fn is_subset(small: &[Vertex], big: &[Vertex]) -> bool {
    let mut it = big.iter();
    small.iter().all(|v| it.any(|b| b == v))
}

/// Size of the intersection of two ascending slices.
pub fn intersection_size(a: &[Vertex], b: &[Vertex]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

pub fn intersection(a: &[Vertex], b: &[Vertex]) -> VertexSet {
    a.iter()
        .copied()
        .filter(|v| b.binary_search(v).is_ok())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(n: usize, k: usize, edges: &[&[Vertex]]) -> UniformHypergraph {
        UniformHypergraph::new(n, k, edges.iter().map(|e| e.to_vec())).unwrap()
    }

    #[test]
    fn canonical_order() {
        let h = hg(5, 3, &[&[3, 2, 1], &[1, 2, 4]]);
        assert_eq!(h.edges(), &[vec![1, 2, 3], vec![1, 2, 4]]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(UniformHypergraph::new(5, 3, vec![vec![1, 1, 2]]).is_err());
        assert!(UniformHypergraph::new(5, 3, vec![vec![1, 2, 6]]).is_err());
        assert!(UniformHypergraph::new(5, 3, vec![vec![0, 1, 2]]).is_err());
        assert!(UniformHypergraph::new(5, 3, vec![vec![1, 2]]).is_err());
        assert!(UniformHypergraph::new(5, 3, vec![vec![1, 2, 3], vec![3, 2, 1]]).is_err());
        assert!(UniformHypergraph::new(5, 1, vec![]).is_err());
    }

    #[test]
    fn primal_of_single_edge_is_clique() {
        let h = hg(4, 4, &[&[1, 2, 3, 4]]);
        let g = h.primal(2).unwrap();
        assert_eq!(g, UniformHypergraph::complete(4, 2).unwrap());
    }

    #[test]
    fn primal_of_empty() {
        let h = UniformHypergraph::empty(7, 4).unwrap();
        assert!(h.primal(3).unwrap().is_empty());
    }

    #[test]
    fn primal_union_of_pairs() {
        let h = hg(5, 3, &[&[1, 2, 3], &[3, 4, 5]]);
        let g = h.primal(2).unwrap();
        // brute force: every pair inside some edge
        let expected: Vec<VertexSet> = (1..=5u32)
            .combinations(2)
            .filter(|p| h.edges().iter().any(|e| is_subset(p, e)))
            .collect();
        assert_eq!(g.edges(), expected.as_slice());
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn primal_parameter_errors() {
        let h = hg(5, 3, &[&[1, 2, 3]]);
        assert!(h.primal(4).is_err());
        assert!(h.primal(1).is_err());
    }

    #[test]
    fn set_helpers() {
        assert!(is_subset(&[2, 4], &[1, 2, 3, 4]));
        assert!(!is_subset(&[2, 5], &[1, 2, 3, 4]));
        assert_eq!(intersection_size(&[1, 3, 5, 7], &[3, 4, 5]), 2);
        assert_eq!(intersection(&[1, 3, 5, 7], &[3, 4, 5]), vec![3, 5]);
    }
}
