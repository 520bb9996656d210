//! Exact maximum r-density.
//!
//! For an r-graph with at least two edges the density is the largest
//! `(e(J) - 1) / (v(J) - r)` over sub-hypergraphs `J` with more than `r`
//! vertices. For a fixed vertex set the ratio is largest when `J` keeps every
//! edge it can, so the search only visits induced sub-hypergraphs, and only
//! vertex subsets of the non-isolated vertices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::combinatorics::binomial;
use super::hypergraph::{UniformHypergraph, VertexSet};
use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Default cap on the number of non-isolated vertices the subset search
/// will visit (`2^cap` subsets).
pub const DEFAULT_DENSITY_CAP: usize = 22;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensityReport {
    #[serde(serialize_with = "crate::serde_rational")]
    pub density: Rational,
    /// Vertex set `U` attaining the maximum; empty when `F` has no edges.
    pub witness: VertexSet,
}

pub fn max_r_density(f: &UniformHypergraph) -> Result<Rational> {
    max_r_density_with_cap(f, DEFAULT_DENSITY_CAP).map(|d| d.density)
}

pub fn max_r_density_with_cap(f: &UniformHypergraph, cap: usize) -> Result<DensityReport> {
    let r = f.k();
    match f.edge_count() {
        0 => {
            return Ok(DensityReport {
                density: Rational::zero(),
                witness: Vec::new(),
            })
        }
        1 => {
            return Ok(DensityReport {
                density: Rational::new(1.into(), BigInt::from(r)),
                witness: f.edges()[0].clone(),
            })
        }
        _ => {}
    }

    let vertices = f.non_isolated_vertices();
    let v = vertices.len();
    if v > cap || v >= 64 {
        return Err(Error::DensityCap { vertices: v, cap });
    }
    let edge_masks: Vec<u64> = f
        .edges()
        .iter()
        .map(|e| {
            e.iter().fold(0u64, |m, x| {
                let pos = vertices
                    .binary_search(x)
                    .expect("edge vertex is non-isolated");
                m | (1 << pos)
            })
        })
        .collect();

    // best ratio kept as (numerator, denominator) of small integers; compared
    // by cross-multiplication
    let mut best: Option<(u64, u64, u64)> = None;
    for mask in 1u64..(1u64 << v) {
        let size = mask.count_ones() as u64;
        if size <= r as u64 {
            continue;
        }
        let e = edge_masks.iter().filter(|&&m| m & mask == m).count() as u64;
        if e == 0 {
            continue;
        }
        let (num, den) = (e - 1, size - r as u64);
        let better = match best {
            None => true,
            Some((bn, bd, _)) => num * bd > bn * den,
        };
        if better {
            best = Some((num, den, mask));
        }
    }
    let (num, den, mask) = best.expect("at least two edges give a candidate subset");
    let witness = (0..v)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| vertices[i])
        .collect();
    Ok(DensityReport {
        density: Rational::new(num.into(), den.into()),
        witness,
    })
}

/// `m_r(K_t^(r)) = (C(t, r) - 1) / (t - r)` for `t > r >= 2`.
pub fn clique_density(t: usize, r: usize) -> Result<Rational> {
    if r < 2 || t <= r {
        return Err(Error::param(format!(
            "clique density needs t > r >= 2, got t = {t}, r = {r}"
        )));
    }
    let edges = BigInt::from(binomial(t as u64, r as u64));
    Ok(Rational::new(edges - 1, BigInt::from(t - r)))
}
