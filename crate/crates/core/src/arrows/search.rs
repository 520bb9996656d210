//! Backtracking search for a good coloring.
//!
//! Edges are colored in ascending lexicographic order, trying colors
//! `1..=l` in turn. For every color the search keeps, per forbidden clique,
//! the number of its edges already carrying that color; an assignment that
//! fills a clique is undone immediately. Edges lying in no forbidden clique
//! of any size can never cause a conflict and are colored 1 after the
//! search.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use itertools::Itertools;
use serde::Serialize;

use super::verify::verify_good_coloring;
use super::TargetList;
use crate::error::{Error, Result};
use crate::hypercore::{enumerate_cliques, Color, EdgeColoring, UniformHypergraph};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Self {
            max_nodes: Some(max_nodes),
            max_time: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Arrows,
    NotArrows,
}

#[derive(Clone, Debug)]
pub struct ArrowResult {
    pub verdict: Verdict,
    /// A good coloring, present exactly when the verdict is `NotArrows`.
    pub witness: Option<EdgeColoring>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    /// The whole search tree was visited; an `Arrows` verdict is a proof.
    pub exhausted: bool,
}

/// Decides whether every coloring of `g` has a color `i` containing
/// `K_{t_i}^(r)`.
///
/// Runs out of budget with [`Error::BudgetExceeded`]; a verdict is only
/// returned when it was established.
pub fn arrows_decision(
    g: &UniformHypergraph,
    targets: &TargetList,
    budget: Budget,
) -> Result<ArrowResult> {
    if g.k() != targets.r() {
        return Err(Error::param(format!(
            "host is {}-uniform, targets are {}-uniform",
            g.k(),
            targets.r()
        )));
    }
    let start = Instant::now();
    let mut engine = Engine::new(g, targets, budget, start)?;
    let found = engine.search(0)?;
    let elapsed = start.elapsed();
    if !found {
        return Ok(ArrowResult {
            verdict: Verdict::Arrows,
            witness: None,
            nodes_explored: engine.nodes,
            elapsed,
            exhausted: true,
        });
    }
    let mut assignment = vec![1 as Color; g.edge_count()];
    for (pos, &edge) in engine.order.iter().enumerate() {
        assignment[edge] = engine.colors_of[pos];
    }
    let witness = EdgeColoring::new(g.clone(), targets.colors(), assignment)?;
    if !verify_good_coloring(g, &witness, targets)?.is_good() {
        return Err(Error::InternalContradiction(
            "search produced a coloring with a forbidden monochromatic clique".into(),
        ));
    }
    Ok(ArrowResult {
        verdict: Verdict::NotArrows,
        witness: Some(witness),
        nodes_explored: engine.nodes,
        elapsed,
        exhausted: false,
    })
}

struct Engine {
    /// Host edge indices in search order.
    order: Vec<usize>,
    colors_of: Vec<Color>,
    /// For color `c - 1`: number of edges a forbidden clique has.
    clique_edges: Vec<u32>,
    /// For color `c - 1` and search position: cliques (of that color's size)
    /// through the edge.
    through: Vec<Vec<Vec<u32>>>,
    /// For color `c - 1` and clique: edges already in color `c`.
    filled: Vec<Vec<u32>>,
    nodes: u64,
    budget: Budget,
    start: Instant,
}

impl Engine {
    fn new(
        g: &UniformHypergraph,
        targets: &TargetList,
        budget: Budget,
        start: Instant,
    ) -> Result<Self> {
        let r = g.k();
        // cliques per distinct target size, as lists of host edge indices
        let mut by_size: HashMap<usize, Vec<Vec<usize>>> = HashMap::new();
        for &t in targets.sizes() {
            if by_size.contains_key(&t) {
                continue;
            }
            let cliques = enumerate_cliques(g, t)?
                .into_iter()
                .map(|w| {
                    w.into_iter()
                        .combinations(r)
                        .map(|e| g.edge_index(&e).expect("clique edges are host edges"))
                        .collect()
                })
                .collect();
            by_size.insert(t, cliques);
        }
        let mut relevant = vec![false; g.edge_count()];
        for cliques in by_size.values() {
            for e in cliques.iter().flatten() {
                relevant[*e] = true;
            }
        }
        let order: Vec<usize> = (0..g.edge_count()).filter(|&e| relevant[e]).collect();
        let mut position = vec![usize::MAX; g.edge_count()];
        for (pos, &e) in order.iter().enumerate() {
            position[e] = pos;
        }

        let mut through = Vec::new();
        let mut filled = Vec::new();
        let mut clique_edges = Vec::new();
        for &t in targets.sizes() {
            let cliques = &by_size[&t];
            let mut per_edge = vec![Vec::new(); order.len()];
            for (id, clique) in cliques.iter().enumerate() {
                for &e in clique {
                    per_edge[position[e]].push(id as u32);
                }
            }
            through.push(per_edge);
            filled.push(vec![0u32; cliques.len()]);
            clique_edges.push(
                crate::hypercore::binomial_u128(t as u64, r as u64).unwrap_or(u128::MAX) as u32,
            );
        }
        Ok(Self {
            colors_of: vec![0; order.len()],
            order,
            clique_edges,
            through,
            filled,
            nodes: 0,
            budget,
            start,
        })
    }

    fn check_budget(&self) -> Result<()> {
        if self.budget.max_nodes.is_some_and(|max| self.nodes > max) {
            return Err(Error::BudgetExceeded { nodes: self.nodes });
        }
        if self.nodes.is_multiple_of(4096)
            && self
                .budget
                .max_time
                .is_some_and(|max| self.start.elapsed() > max)
        {
            return Err(Error::BudgetExceeded { nodes: self.nodes });
        }
        Ok(())
    }

    /// Returns true once every relevant edge is colored without conflict.
    fn search(&mut self, pos: usize) -> Result<bool> {
        if pos == self.order.len() {
            return Ok(true);
        }
        for c in 0..self.clique_edges.len() {
            self.nodes += 1;
            self.check_budget()?;
            if self.assign(pos, c) {
                self.colors_of[pos] = c as Color + 1;
                if self.search(pos + 1)? {
                    return Ok(true);
                }
            }
            self.unassign(pos, c);
        }
        Ok(false)
    }

    /// Adds the edge at `pos` to color class `c`; false if that completes a
    /// forbidden clique. Counters are updated either way.
    fn assign(&mut self, pos: usize, c: usize) -> bool {
        let full = self.clique_edges[c];
        let mut ok = true;
        for &id in &self.through[c][pos] {
            let slot = &mut self.filled[c][id as usize];
            *slot += 1;
            ok &= *slot < full;
        }
        ok
    }

    fn unassign(&mut self, pos: usize, c: usize) {
        for &id in &self.through[c][pos] {
            self.filled[c][id as usize] -= 1;
        }
    }
}
