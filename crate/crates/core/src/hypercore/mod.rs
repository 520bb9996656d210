//! Hypergraph data model: uniform hypergraphs, exact densities, clique
//! enumeration, edge colorings and the text formats.

pub mod cliques;
pub mod coloring;
pub mod combinatorics;
pub mod density;
pub mod hypergraph;
pub mod io;

pub use cliques::enumerate_cliques;
pub use coloring::{count_mono_clique_copies, Color, EdgeColoring};
pub use combinatorics::{binomial, binomial_u128};
pub use density::{
    clique_density, max_r_density, max_r_density_with_cap, DensityReport, Rational,
    DEFAULT_DENSITY_CAP,
};
pub use hypergraph::{
    intersection, intersection_size, is_subset, primal_r_graph, UniformHypergraph, Vertex,
    VertexSet,
};
pub use io::{
    format_coloring, format_hypergraph, parse_coloring, parse_coloring_for, parse_hypergraph,
    read_coloring, read_coloring_for, read_hypergraph, write_coloring, write_hypergraph,
};
