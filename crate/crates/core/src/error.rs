use std::path::PathBuf;

use thiserror::Error;

use crate::hypercore::VertexSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(
        "hypergraph is not {r}-linear: edges {first:?} and {second:?} share {shared} vertices"
    )]
    NotLinear {
        r: usize,
        first: VertexSet,
        second: VertexSet,
        shared: usize,
    },

    #[error("density search over {vertices} vertices exceeds the configured cap of {cap}")]
    DensityCap { vertices: usize, cap: usize },

    #[error("search budget exceeded after {nodes} nodes (inconclusive)")]
    BudgetExceeded { nodes: u64 },

    #[error("no good coloring exists: K_{s} arrows the targets")]
    NoneExists { s: usize },

    #[error("no arrowing host found with at most {n_max} vertices")]
    NotFound { n_max: usize },

    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}
