use std::collections::BTreeSet;

use serde::Serialize;

use super::violations::{cover_configurations, is_conformal, linearity_violations};
use crate::covers::CoverFamily;
use crate::error::{Error, Result};
use crate::hypercore::{UniformHypergraph, VertexSet};

#[derive(Clone, Debug)]
pub struct CleanReport {
    pub r: usize,
    pub t: usize,
    pub input_edges: usize,
    /// Pairs of edges meeting in at least `r` vertices (`Y` of them).
    pub linearity_violations: Vec<(VertexSet, VertexSet)>,
    /// Minimal non-trivial r-covers of t-sets by edges (`X` of them).
    pub cover_violations: Vec<(VertexSet, CoverFamily)>,
    pub deleted: Vec<VertexSet>,
    pub result: UniformHypergraph,
}

#[derive(Serialize)]
struct CoverJson<'a> {
    w: &'a VertexSet,
    members: &'a [VertexSet],
}

#[derive(Serialize)]
pub struct CleanReportJson<'a> {
    n: usize,
    s: usize,
    r: usize,
    t: usize,
    input_edges: usize,
    x: usize,
    y: usize,
    deleted_count: usize,
    result_edges: usize,
    deleted_fraction: f64,
    linearity_violations: Vec<[&'a VertexSet; 2]>,
    cover_violations: Vec<CoverJson<'a>>,
    deleted: &'a [VertexSet],
}

impl CleanReport {
    pub fn x(&self) -> usize {
        self.cover_violations.len()
    }

    pub fn y(&self) -> usize {
        self.linearity_violations.len()
    }

    pub fn deleted_fraction(&self) -> f64 {
        if self.input_edges == 0 {
            0.0
        } else {
            self.deleted.len() as f64 / self.input_edges as f64
        }
    }

    pub fn to_json(&self) -> CleanReportJson<'_> {
        CleanReportJson {
            n: self.result.n(),
            s: self.result.k(),
            r: self.r,
            t: self.t,
            input_edges: self.input_edges,
            x: self.x(),
            y: self.y(),
            deleted_count: self.deleted.len(),
            result_edges: self.result.edge_count(),
            deleted_fraction: self.deleted_fraction(),
            linearity_violations: self
                .linearity_violations
                .iter()
                .map(|(a, b)| [a, b])
                .collect(),
            cover_violations: self
                .cover_violations
                .iter()
                .map(|(w, f)| CoverJson {
                    w,
                    members: &f.members,
                })
                .collect(),
            deleted: &self.deleted,
        }
    }
}

/// Deletes one edge from every bad configuration of `h`, all found on the
/// original hypergraph: the smaller edge of every overlapping pair and the
/// smallest member of every minimal non-trivial cover.
///
/// The result is then re-checked for r-linearity and (r, t)-conformality
/// from scratch; a failure is reported as an internal contradiction.
pub fn clean(h: &UniformHypergraph, r: usize, t: usize) -> Result<CleanReport> {
    let pairs = linearity_violations(h, r)?;
    let covers = cover_configurations(h, r, t)?;

    let mut deleted: BTreeSet<VertexSet> = BTreeSet::new();
    deleted.extend(pairs.iter().map(|(a, _)| a.clone()));
    deleted.extend(covers.iter().map(|(_, f)| f.members[0].clone()));
    let result = h.filter_edges(|e| !deleted.contains(e));

    if let Some((a, b)) = linearity_violations(&result, r)?.into_iter().next() {
        return Err(Error::InternalContradiction(format!(
            "cleaned hypergraph still has edges {a:?} and {b:?} sharing {r} vertices"
        )));
    }
    if !is_conformal(&result, r, t)? {
        return Err(Error::InternalContradiction(format!(
            "cleaned hypergraph is not ({r}, {t})-conformal"
        )));
    }
    Ok(CleanReport {
        r,
        t,
        input_edges: h.edge_count(),
        linearity_violations: pairs,
        cover_violations: covers,
        deleted: deleted.into_iter().collect(),
        result,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::violations::is_r_linear;
    use crate::hypercore::{intersection_size, is_subset, Vertex};

    fn hg(n: usize, k: usize, edges: &[&[Vertex]]) -> UniformHypergraph {
        UniformHypergraph::new(n, k, edges.iter().map(|e| e.to_vec())).unwrap()
    }

    #[test]
    fn clean_input_is_untouched() {
        let h = hg(9, 3, &[&[1, 2, 3], &[3, 4, 5], &[5, 6, 7]]);
        let rep = clean(&h, 2, 3).unwrap();
        assert!(rep.deleted.is_empty());
        assert_eq!(rep.result, h);
    }

    #[test]
    fn breaks_a_cover_triangle() {
        let h = hg(6, 3, &[&[1, 2, 4], &[2, 3, 5], &[1, 3, 6]]);
        let rep = clean(&h, 2, 3).unwrap();
        assert_eq!(rep.deleted, vec![vec![1, 2, 4]]);
        assert_eq!(rep.x(), 1);
        assert_eq!(rep.y(), 0);
        assert!(is_r_linear(&rep.result, 2).unwrap());
        assert!(is_conformal(&rep.result, 2, 3).unwrap());
    }

    #[test]
    fn overlapping_pair_loses_smaller_edge() {
        let h = hg(6, 4, &[&[1, 2, 3, 4], &[3, 4, 5, 6]]);
        let rep = clean(&h, 2, 3).unwrap();
        assert_eq!(rep.deleted, vec![vec![1, 2, 3, 4]]);
        assert_eq!(rep.result.edges(), &[vec![3, 4, 5, 6]]);
        assert_eq!(rep.result.edge_count(), rep.input_edges - rep.deleted.len());
    }

    #[test]
    fn covers_inside_an_edge_are_removed_too() {
        // {1,2,3} lies in the first edge and is also covered by the three
        // others; all three overlap the first edge in a pair
        let h = hg(
            9,
            4,
            &[&[1, 2, 3, 9], &[1, 2, 4, 5], &[2, 3, 6, 7], &[1, 3, 4, 8]],
        );
        let rep = clean(&h, 2, 3).unwrap();
        assert!(is_r_linear(&rep.result, 2).unwrap());
        assert!(is_conformal(&rep.result, 2, 3).unwrap());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_hypergraph() -> impl Strategy<Value = UniformHypergraph> {
            (6usize..=10, 3usize..=4).prop_flat_map(|(n, k)| {
                let edge = proptest::collection::btree_set(1..=n as Vertex, k)
                    .prop_map(|s| s.into_iter().collect::<VertexSet>());
                proptest::collection::btree_set(edge, 0..=8)
                    .prop_map(move |es| UniformHypergraph::new(n, k, es).unwrap())
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(128))]
            #[test]
            fn cleaning_is_sound(h in small_hypergraph()) {
                let rep = clean(&h, 2, 3).unwrap();
                prop_assert!(rep.result.is_subgraph_of(&h));
                prop_assert_eq!(rep.result.edge_count(), h.edge_count() - rep.deleted.len());
                prop_assert!(rep.deleted.len() <= rep.x() + rep.y());
                for (a, b) in &rep.linearity_violations {
                    prop_assert!(intersection_size(a, b) >= 2);
                    prop_assert!(rep.deleted.contains(a) || rep.deleted.contains(b));
                }
                for (_, f) in &rep.cover_violations {
                    prop_assert!(f.members.iter().any(|m| rep.deleted.contains(m)));
                }
                // independent certificate: each primal triangle sits in one edge
                let g = rep.result.primal(2).unwrap();
                for w in crate::hypercore::enumerate_cliques(&g, 3).unwrap() {
                    prop_assert!(rep.result.edges().iter().any(|e| is_subset(&w, e)));
                }
            }
        }
    }
}
