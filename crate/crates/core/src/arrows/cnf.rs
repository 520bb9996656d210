//! DIMACS CNF encoding of the existence of a good coloring.
//!
//! Variable `x_{e,i}` (edge `e`, color `i`, both counted from zero) is
//! numbered `e * l + i + 1`. The formula is satisfiable exactly when the
//! host does not arrow the targets.

use std::fmt::Write as _;

use itertools::Itertools;

use super::TargetList;
use crate::error::{Error, Result};
use crate::hypercore::{enumerate_cliques, UniformHypergraph};

/// Encodes "some coloring avoids every forbidden monochromatic clique".
///
/// Clauses: each edge gets at least one color, at most one color, and no
/// `K_{t_i}^(r)` has all its edges in color `i`. Needs at least two colors.
pub fn export_cnf(g: &UniformHypergraph, targets: &TargetList) -> Result<String> {
    let l = targets.colors();
    if l < 2 {
        return Err(Error::param("CNF export needs at least two colors"));
    }
    if g.k() != targets.r() {
        return Err(Error::param(format!(
            "host is {}-uniform, targets are {}-uniform",
            g.k(),
            targets.r()
        )));
    }
    let var = |e: usize, i: usize| e * l + i + 1;
    let mut clauses: Vec<Vec<i64>> = Vec::new();
    for e in 0..g.edge_count() {
        clauses.push((0..l).map(|i| var(e, i) as i64).collect());
        for (i, j) in (0..l).tuple_combinations() {
            clauses.push(vec![-(var(e, i) as i64), -(var(e, j) as i64)]);
        }
    }
    for (i, &t) in targets.sizes().iter().enumerate() {
        for w in enumerate_cliques(g, t)? {
            let clause = w
                .into_iter()
                .combinations(g.k())
                .map(|e| -(var(g.edge_index(&e).expect("clique edge"), i) as i64))
                .collect();
            clauses.push(clause);
        }
    }

    let mut out = String::new();
    for (e, edge) in g.edges().iter().enumerate() {
        for i in 0..l {
            let verts = edge.iter().map(|v| v.to_string()).join(" ");
            writeln!(out, "c x{} = edge {} color {}", var(e, i), verts, i + 1).unwrap();
        }
    }
    writeln!(out, "p cnf {} {}", g.edge_count() * l, clauses.len()).unwrap();
    for clause in &clauses {
        for lit in clause {
            write!(out, "{lit} ").unwrap();
        }
        out.push_str("0\n");
    }
    Ok(out)
}
