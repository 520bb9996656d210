use serde::Serialize;

use super::TargetList;
use crate::error::{Error, Result};
use crate::hypercore::{enumerate_cliques, Color, EdgeColoring, UniformHypergraph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ColoringCheck {
    Good,
    /// First monochromatic forbidden clique, by color then lexicographically.
    Violation {
        color: Color,
        vertices: VertexSet,
    },
}

impl ColoringCheck {
    pub fn is_good(&self) -> bool {
        matches!(self, ColoringCheck::Good)
    }
}

/// Checks that no color class `i` contains a copy of `K_{t_i}^(r)`, by
/// enumerating cliques of each color class.
pub fn verify_good_coloring(
    g: &UniformHypergraph,
    c: &EdgeColoring,
    targets: &TargetList,
) -> Result<ColoringCheck> {
    if c.host() != g {
        return Err(Error::param(
            "coloring does not color exactly the edges of the host",
        ));
    }
    if c.colors() != targets.colors() {
        return Err(Error::param(format!(
            "coloring uses {} colors, targets need {}",
            c.colors(),
            targets.colors()
        )));
    }
    if g.k() != targets.r() {
        return Err(Error::param(format!(
            "host is {}-uniform, targets are {}-uniform",
            g.k(),
            targets.r()
        )));
    }
    for color in 1..=targets.colors() as Color {
        let class = c.color_class(color);
        if let Some(w) = enumerate_cliques(&class, targets.size_for(color))?
            .into_iter()
            .next()
        {
            return Ok(ColoringCheck::Violation { color, vertices: w });
        }
    }
    Ok(ColoringCheck::Good)
}
