use std::collections::HashSet;

use itertools::Itertools;

use super::hypergraph::{UniformHypergraph, Vertex, VertexSet};
use crate::error::{Error, Result};

/// All `t`-vertex sets spanning a complete r-graph in `g`, in lexicographic
/// order. Only non-isolated vertices are considered.
pub fn enumerate_cliques(g: &UniformHypergraph, t: usize) -> Result<Vec<VertexSet>> {
    let r = g.k();
    if t < r {
        return Err(Error::param(format!(
            "clique size {t} is smaller than the uniformity {r}"
        )));
    }
    let search = CliqueSearch {
        r,
        t,
        edges: g.edges().iter().map(|e| e.as_slice()).collect(),
    };
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(t);
    search.extend(&mut current, &g.non_isolated_vertices(), &mut out);
    Ok(out)
}

struct CliqueSearch<'a> {
    r: usize,
    t: usize,
    edges: HashSet<&'a [Vertex]>,
}

impl CliqueSearch<'_> {
    fn extend(&self, current: &mut VertexSet, candidates: &[Vertex], out: &mut Vec<VertexSet>) {
        if current.len() == self.t {
            out.push(current.clone());
            return;
        }
        for (i, &v) in candidates.iter().enumerate() {
            if current.len() + candidates.len() - i < self.t {
                break;
            }
            current.push(v);
            let next: Vec<Vertex> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&u| self.compatible(current, u))
                .collect();
            self.extend(current, &next, out);
            current.pop();
        }
    }

    /// Every r-set made of `u`, the newest vertex of `current`, and r-2
    /// other vertices of `current` must be an edge.
    fn compatible(&self, current: &[Vertex], u: Vertex) -> bool {
        if current.len() + 1 < self.r {
            return true;
        }
        let (&newest, rest) = current.split_last().expect("non-empty");
        let mut key = Vec::with_capacity(self.r);
        rest.iter().copied().combinations(self.r - 2).all(|others| {
            key.clear();
            key.extend_from_slice(&others);
            key.push(newest);
            key.push(u);
            self.edges.contains(key.as_slice())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::hypergraph::is_subset;

    fn naive(g: &UniformHypergraph, t: usize) -> Vec<VertexSet> {
        (1..=g.n() as Vertex)
            .combinations(t)
            .filter(|w| {
                let mut any = false;
                let all = w.iter().copied().combinations(g.k()).all(|b| {
                    any = true;
                    g.contains_edge(&b)
                });
                all && any && w.iter().all(|v| g.edges().iter().any(|e| e.contains(v)))
            })
            .collect()
    }

    #[test]
    fn triangles_of_k4() {
        let k4 = UniformHypergraph::complete(4, 2).unwrap();
        let got = enumerate_cliques(&k4, 3).unwrap();
        assert_eq!(
            got,
            vec![vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]]
        );
    }

    #[test]
    fn five_cycle_has_no_triangle() {
        let c5 = UniformHypergraph::new(
            5,
            2,
            vec![vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5], vec![1, 5]],
        )
        .unwrap();
        assert!(enumerate_cliques(&c5, 3).unwrap().is_empty());
        assert_eq!(naive(&c5, 3), Vec::<VertexSet>::new());
    }

    #[test]
    fn k5_3_minus_an_edge() {
        let g = UniformHypergraph::complete(5, 3)
            .unwrap()
            .filter_edges(|e| e != [1, 2, 3]);
        let got = enumerate_cliques(&g, 4).unwrap();
        assert_eq!(
            got,
            vec![vec![1, 2, 4, 5], vec![1, 3, 4, 5], vec![2, 3, 4, 5]]
        );
        assert_eq!(got, naive(&g, 4));
    }

    #[test]
    fn size_r_cliques_are_edges() {
        let g = UniformHypergraph::new(6, 3, vec![vec![1, 2, 3], vec![2, 5, 6]]).unwrap();
        assert_eq!(enumerate_cliques(&g, 3).unwrap(), g.edges());
        assert!(enumerate_cliques(&g, 2).is_err());
    }

    #[test]
    fn cliques_are_inside_vertex_range() {
        let g = UniformHypergraph::complete(6, 3).unwrap();
        for w in enumerate_cliques(&g, 5).unwrap() {
            assert!(is_subset(&w, &[1, 2, 3, 4, 5, 6]));
        }
        assert_eq!(enumerate_cliques(&g, 5).unwrap().len(), 6);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn random_graph() -> impl Strategy<Value = (UniformHypergraph, usize)> {
            (4usize..=10, 2usize..=3).prop_flat_map(|(n, r)| {
                let all: Vec<VertexSet> = (1..=n as Vertex).combinations(r).collect();
                let m = all.len();
                (proptest::collection::vec(any::<bool>(), m), r..=r + 3).prop_map(
                    move |(mask, t)| {
                        let edges = all
                            .iter()
                            .zip(&mask)
                            .filter(|(_, &keep)| keep)
                            .map(|(e, _)| e.clone());
                        (UniformHypergraph::new(n, r, edges).unwrap(), t)
                    },
                )
            })
        }

        proptest! {
            #[test]
            fn agrees_with_subset_scan((g, t) in random_graph()) {
                prop_assert_eq!(enumerate_cliques(&g, t).unwrap(), naive(&g, t));
            }
        }
    }
}
