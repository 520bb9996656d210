use itertools::Itertools;

use super::violations::linearity_violations;
use crate::error::{Error, Result};
use crate::hypercore::{intersection_size, Color, EdgeColoring, UniformHypergraph, Vertex};

/// Colors the primal r-graph of `h0` by copying `base`, a coloring of the
/// complete r-graph on `1..=s`, into every edge of `h0` through the
/// order-preserving bijection between the edge and `1..=s`.
///
/// Requires `h0` to be r-linear, so that every r-set is colored by exactly
/// one edge.
pub fn lift_coloring(
    h0: &UniformHypergraph,
    r: usize,
    base: &EdgeColoring,
) -> Result<EdgeColoring> {
    let s = h0.k();
    let complete = UniformHypergraph::complete(s, r)?;
    if base.host() != &complete {
        return Err(Error::param(format!(
            "base coloring must color the complete {r}-graph on {s} vertices"
        )));
    }
    if let Some((first, second)) = linearity_violations(h0, r)?.into_iter().next() {
        let shared = intersection_size(&first, &second);
        return Err(Error::NotLinear {
            r,
            first,
            second,
            shared,
        });
    }

    // positions 0..s of an edge, as 1-based labels of the base clique
    let patterns: Vec<(Vec<usize>, Color)> = (0..s)
        .combinations(r)
        .map(|pos| {
            let label: Vec<Vertex> = pos.iter().map(|&p| p as Vertex + 1).collect();
            let color = base.color_of(&label).expect("base colors every r-set");
            (pos, color)
        })
        .collect();
    let mut pairs: Vec<(Vec<Vertex>, Color)> = h0
        .edges()
        .iter()
        .flat_map(|edge| {
            patterns
                .iter()
                .map(move |(pos, c)| (pos.iter().map(|&p| edge[p]).collect(), *c))
        })
        .collect();
    pairs.sort_unstable();
    let host = UniformHypergraph::new(h0.n(), r, pairs.iter().map(|(e, _)| e.clone()))?;
    let assignment = pairs.into_iter().map(|(_, c)| c).collect();
    EdgeColoring::new(host, base.colors(), assignment)
}
