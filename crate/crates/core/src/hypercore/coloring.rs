use serde::Serialize;

use super::cliques::enumerate_cliques;
use super::hypergraph::{UniformHypergraph, Vertex};
use crate::error::{Error, Result};

/// Color index, `1..=colors`.
pub type Color = u32;

/// A total assignment of colors `1..=colors` to the edges of a host
/// hypergraph. `assignment[i]` colors `host.edges()[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeColoring {
    host: UniformHypergraph,
    colors: usize,
    assignment: Vec<Color>,
}

impl EdgeColoring {
    pub fn new(host: UniformHypergraph, colors: usize, assignment: Vec<Color>) -> Result<Self> {
        if colors == 0 {
            return Err(Error::param("a coloring needs at least one color"));
        }
        if assignment.len() != host.edge_count() {
            return Err(Error::param(format!(
                "coloring assigns {} colors to {} edges",
                assignment.len(),
                host.edge_count()
            )));
        }
        if let Some(&c) = assignment.iter().find(|&&c| c == 0 || c as usize > colors) {
            return Err(Error::param(format!("color {c} outside 1..={colors}")));
        }
        Ok(Self {
            host,
            colors,
            assignment,
        })
    }

    /// Colors every edge of `host` with color 1.
    pub fn monochromatic(host: UniformHypergraph, colors: usize) -> Result<Self> {
        let assignment = vec![1; host.edge_count()];
        Self::new(host, colors, assignment)
    }

    /// Builds a coloring from `(edge, color)` pairs, which must list every
    /// edge of `host` exactly once.
    pub fn from_pairs(
        host: UniformHypergraph,
        colors: usize,
        pairs: impl IntoIterator<Item = (Vec<Vertex>, Color)>,
    ) -> Result<Self> {
        let mut assignment: Vec<Option<Color>> = vec![None; host.edge_count()];
        for (edge, color) in pairs {
            let idx = host
                .edge_index(&edge)
                .ok_or_else(|| Error::param(format!("{edge:?} is not an edge of the host")))?;
            if assignment[idx].replace(color).is_some() {
                return Err(Error::param(format!("edge {edge:?} colored twice")));
            }
        }
        let assignment = assignment
            .into_iter()
            .enumerate()
            .map(|(i, c)| {
                c.ok_or_else(|| Error::param(format!("edge {:?} left uncolored", host.edges()[i])))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(host, colors, assignment)
    }

    pub fn host(&self) -> &UniformHypergraph {
        &self.host
    }

    pub fn colors(&self) -> usize {
        self.colors
    }

    pub fn assignment(&self) -> &[Color] {
        &self.assignment
    }

    pub fn color_of(&self, edge: &[Vertex]) -> Option<Color> {
        self.host.edge_index(edge).map(|i| self.assignment[i])
    }

    /// `(edge, color)` pairs in edge order.
    pub fn iter(&self) -> impl Iterator<Item = (&[Vertex], Color)> + '_ {
        self.host
            .edges()
            .iter()
            .map(|e| e.as_slice())
            .zip(self.assignment.iter().copied())
    }

    /// The sub-hypergraph of edges carrying `color`.
    pub fn color_class(&self, color: Color) -> UniformHypergraph {
        let mut it = self.assignment.iter();
        self.host
            .filter_edges(|_| *it.next().expect("one color per edge") == color)
    }
}

/// Number of `t`-vertex sets whose r-subsets are all host edges of `color`.
pub fn count_mono_clique_copies(c: &EdgeColoring, color: Color, t: usize) -> Result<usize> {
    if color == 0 || color as usize > c.colors() {
        return Err(Error::param(format!(
            "color {color} outside 1..={}",
            c.colors()
        )));
    }
    Ok(enumerate_cliques(&c.color_class(color), t)?.len())
}
