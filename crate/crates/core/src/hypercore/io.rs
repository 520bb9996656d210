//! Plain-text formats.
//!
//! Hypergraphs (`.uhg`):
//!
//! ```text
//! uhg <n> <k>
//! 1 2 3
//! 2 4 5
//! ```
//!
//! Colorings (`.col`) list every host edge followed by its color:
//!
//! ```text
//! col <n> <k> <L>
//! 1 2 1
//! 1 3 2
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Vertices on an edge
//! line must be strictly ascending.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::coloring::{Color, EdgeColoring};
use super::hypergraph::{UniformHypergraph, Vertex, VertexSet};
use crate::error::{Error, Result};

pub fn parse_hypergraph(text: &str) -> Result<UniformHypergraph> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `uhg <n> <k>` header"))?;
    let [n, k] = parse_header(line_no, header, "uhg")?;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for (line_no, line) in lines {
        let edge = parse_edge(line_no, line, n, k, 0)?.0;
        if !seen.insert(edge.clone()) {
            return Err(Error::parse(line_no, format!("duplicate edge {edge:?}")));
        }
        edges.push(edge);
    }
    UniformHypergraph::new(n, k, edges).map_err(|e| Error::parse(0, e.to_string()))
}

pub fn format_hypergraph(h: &UniformHypergraph) -> String {
    let mut out = format!("uhg {} {}\n", h.n(), h.k());
    for e in h.edges() {
        push_vertices(&mut out, e);
        out.push('\n');
    }
    out
}

pub fn read_hypergraph(path: impl AsRef<Path>) -> Result<UniformHypergraph> {
    parse_hypergraph(&read(path.as_ref())?)
}

pub fn write_hypergraph(h: &UniformHypergraph, path: impl AsRef<Path>) -> Result<()> {
    write(path.as_ref(), &format_hypergraph(h))
}

/// Parses a coloring whose host is the set of listed edges on `1..=n`.
pub fn parse_coloring(text: &str) -> Result<EdgeColoring> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `col <n> <k> <L>` header"))?;
    let [n, k, colors] = parse_header(line_no, header, "col")?;
    if colors == 0 {
        return Err(Error::parse(line_no, "color count must be positive"));
    }
    let mut pairs: Vec<(VertexSet, Color)> = Vec::new();
    let mut seen = HashSet::new();
    for (line_no, line) in lines {
        let (edge, color) = parse_edge(line_no, line, n, k, colors)?;
        if !seen.insert(edge.clone()) {
            return Err(Error::parse(line_no, format!("duplicate edge {edge:?}")));
        }
        pairs.push((edge, color.expect("color column requested")));
    }
    let host = UniformHypergraph::new(n, k, pairs.iter().map(|(e, _)| e.clone()))
        .map_err(|e| Error::parse(0, e.to_string()))?;
    EdgeColoring::from_pairs(host, colors, pairs).map_err(|e| Error::parse(0, e.to_string()))
}

/// Parses a coloring and checks that it colors exactly the edges of `host`.
pub fn parse_coloring_for(text: &str, host: &UniformHypergraph) -> Result<EdgeColoring> {
    let c = parse_coloring(text)?;
    if c.host() != host {
        return Err(Error::param(format!(
            "coloring covers {} edges on {} vertices, host has {} edges on {} vertices",
            c.host().edge_count(),
            c.host().n(),
            host.edge_count(),
            host.n()
        )));
    }
    Ok(c)
}

pub fn format_coloring(c: &EdgeColoring) -> String {
    let h = c.host();
    let mut out = format!("col {} {} {}\n", h.n(), h.k(), c.colors());
    for (edge, color) in c.iter() {
        push_vertices(&mut out, edge);
        let _ = writeln!(out, " {color}");
    }
    out
}

pub fn read_coloring(path: impl AsRef<Path>) -> Result<EdgeColoring> {
    parse_coloring(&read(path.as_ref())?)
}

pub fn read_coloring_for(path: impl AsRef<Path>, host: &UniformHypergraph) -> Result<EdgeColoring> {
    parse_coloring_for(&read(path.as_ref())?, host)
}

pub fn write_coloring(c: &EdgeColoring, path: impl AsRef<Path>) -> Result<()> {
    write(path.as_ref(), &format_coloring(c))
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_header<const N: usize>(line_no: usize, line: &str, tag: &str) -> Result<[usize; N]> {
    let mut tokens = line.split_whitespace();
    if tokens.next() != Some(tag) {
        return Err(Error::parse(line_no, format!("expected `{tag}` header")));
    }
    let values: Vec<usize> = tokens
        .map(|t| {
            t.parse()
                .map_err(|_| Error::parse(line_no, format!("bad header field `{t}`")))
        })
        .collect::<Result<_>>()?;
    let values: [usize; N] = values
        .try_into()
        .map_err(|_| Error::parse(line_no, format!("`{tag}` header needs {N} fields")))?;
    if values[1] < 2 {
        return Err(Error::parse(line_no, "uniformity must be at least 2"));
    }
    Ok(values)
}

/// Parses `k` vertices, plus a trailing color when `colors > 0`.
fn parse_edge(
    line_no: usize,
    line: &str,
    n: usize,
    k: usize,
    colors: usize,
) -> Result<(VertexSet, Option<Color>)> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    let expected = k + usize::from(colors > 0);
    if tokens.len() != expected {
        return Err(Error::parse(
            line_no,
            format!("expected {expected} fields, found {}", tokens.len()),
        ));
    }
    let mut edge = Vec::with_capacity(k);
    for tok in &tokens[..k] {
        let v: Vertex = tok
            .parse()
            .map_err(|_| Error::parse(line_no, format!("bad vertex `{tok}`")))?;
        if v == 0 || v as usize > n {
            return Err(Error::parse(line_no, format!("vertex {v} outside 1..={n}")));
        }
        if let Some(&last) = edge.last() {
            if v == last {
                return Err(Error::parse(line_no, format!("repeated vertex {v}")));
            }
            if v < last {
                return Err(Error::parse(line_no, "vertices not in ascending order"));
            }
        }
        edge.push(v);
    }
    let color = if colors > 0 {
        let tok = tokens[k];
        let c: Color = tok
            .parse()
            .map_err(|_| Error::parse(line_no, format!("bad color `{tok}`")))?;
        if c == 0 || c as usize > colors {
            return Err(Error::parse(
                line_no,
                format!("color {c} outside 1..={colors}"),
            ));
        }
        Some(c)
    } else {
        None
    };
    Ok((edge, color))
}

fn push_vertices(out: &mut String, edge: &[Vertex]) {
    for (i, v) in edge.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{v}");
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })
}
