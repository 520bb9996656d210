//! Construction and verification tools for asymmetric Ramsey properties of
//! uniform hypergraphs.
//!
//! The pipeline samples a random s-graph `H`, deletes one edge from every
//! pair of edges sharing `r` vertices and from every minimal non-trivial
//! r-cover of a t-set, and colors the primal r-graph of what is left by
//! copying a good coloring of `K_s^(r)` into every remaining edge. The
//! resulting coloring is checked exactly, so every run ends with a
//! certificate that the primal graph does not arrow the targets.
//!
//! Modules:
//!
//! * [`hypercore`]: hypergraphs, densities, cliques, colorings, file formats.
//! * [`covers`]: minimal r-covers, the cover functional and the expectation bound.
//! * [`construct`]: sampling, cleaning, and lifting colorings.
//! * [`arrows`]: arrowing decisions, CNF export, small Ramsey numbers.

pub mod arrows;
pub mod construct;
pub mod covers;
pub mod error;
pub mod hypercore;
pub mod probability;

pub use error::{Error, Result};
pub use hypercore::{EdgeColoring, Rational, UniformHypergraph, Vertex, VertexSet};

pub(crate) fn serde_rational<S: serde::Serializer>(
    value: &num_rational::BigRational,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}
