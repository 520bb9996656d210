//! Upper bound on the expected number of minimal non-trivial r-covers of a
//! fixed t-set by the edges of a random s-graph.
//!
//! Every such cover by edges `A_1..A_k` traces to a minimal non-trivial
//! cover `{A_i ∩ W}` of `W` by proper subsets, and an s-set with a given
//! trace `T` can be chosen in at most `C(n, s - |T|)` ways. Summing over the
//! trace family gives
//!
//! ```text
//! E(X_W) <= Σ_{E in trace family} Π_{A in E} C(n, s - |A|) · p^|E|
//! ```
//!
//! which is reported next to the reference scale `p · n^(s - t)`.

use itertools::Itertools;
use num_bigint::BigInt;
use serde::Serialize;

use super::{enumerate_minimal_nontrivial_covers, CoverFamily};
use crate::error::{Error, Result};
use crate::hypercore::{binomial, Rational, Vertex, VertexSet};
use crate::probability::{PowerSum, Probability};

#[derive(Clone, Debug)]
pub struct BoundTerm {
    pub family: CoverFamily,
    /// `Π_A C(n, s - |A|)`.
    pub coefficient: BigInt,
    /// `|E|`, the power of `p`.
    pub p_power: u32,
    pub value: PowerSum,
}

#[derive(Clone, Debug)]
pub struct CoverBoundReport {
    pub n: u64,
    pub s: usize,
    pub r: usize,
    pub t: usize,
    pub p: Probability,
    pub bound_terms: Vec<BoundTerm>,
    pub total: PowerSum,
    pub reference: PowerSum,
}

/// JSON form of [`CoverBoundReport`]; numeric fields are decimal
/// approximations of the exact values.
#[derive(Clone, Debug, Serialize)]
pub struct CoverBoundJson {
    pub n: u64,
    pub s: usize,
    pub r: usize,
    pub t: usize,
    pub p: String,
    pub trace_count: usize,
    pub bound: f64,
    pub reference: f64,
    pub ratio: Option<f64>,
}

impl CoverBoundReport {
    /// `total / reference`, or `None` when the reference is zero.
    pub fn ratio(&self) -> Option<PowerSum> {
        if self.p.is_zero() {
            return None;
        }
        self.total.div_monomial(&self.reference)
    }

    /// Decides `total / reference < threshold` exactly.
    pub fn ratio_below(&self, threshold: &Rational) -> Option<bool> {
        self.ratio().map(|q| q.is_less_than(threshold))
    }

    pub fn to_json(&self) -> CoverBoundJson {
        CoverBoundJson {
            n: self.n,
            s: self.s,
            r: self.r,
            t: self.t,
            p: self.p.to_string(),
            trace_count: self.bound_terms.len(),
            bound: self.total.to_f64(),
            reference: self.reference.to_f64(),
            ratio: self.ratio().map(|q| q.to_f64()),
        }
    }
}

pub fn expected_cover_bound(
    n: u64,
    s: usize,
    r: usize,
    t: usize,
    p: &Probability,
) -> Result<CoverBoundReport> {
    if !(r >= 2 && t > r && s >= t) {
        return Err(Error::param(format!(
            "expected s >= t > r >= 2, got s = {s}, t = {t}, r = {r}"
        )));
    }
    if n < s as u64 {
        return Err(Error::param(format!("n = {n} is smaller than s = {s}")));
    }
    let w: VertexSet = (1..=t as Vertex).collect();
    let max_size = (t - 1).min(s);
    let candidates: Vec<VertexSet> = (r..=max_size)
        .flat_map(|k| w.iter().copied().combinations(k))
        .collect();
    let trace_family = enumerate_minimal_nontrivial_covers(&w, &candidates, r)?;

    let mut total = PowerSum::zero();
    let bound_terms: Vec<BoundTerm> = trace_family
        .into_iter()
        .map(|family| {
            let coefficient: BigInt = family
                .members
                .iter()
                .map(|a| BigInt::from(binomial(n, (s - a.len()) as u64)))
                .product();
            let p_power = family.len() as u32;
            let value = p
                .pow(p_power)
                .scale(&Rational::from_integer(coefficient.clone()));
            total = total.add(&value);
            BoundTerm {
                family,
                coefficient,
                p_power,
                value,
            }
        })
        .collect();
    let scale = Rational::from_integer(BigInt::from(n).pow((s - t) as u32));
    let reference = p.pow(1).scale(&scale);
    Ok(CoverBoundReport {
        n,
        s,
        r,
        t,
        p: p.clone(),
        bound_terms,
        total,
        reference,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::probability::ProbabilitySpec;
    use num_traits::Zero;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn triples_have_one_trace_cover() {
        let p = Probability::Exact(q(1, 1000));
        let rep = expected_cover_bound(50, 4, 2, 3, &p).unwrap();
        assert_eq!(rep.bound_terms.len(), 1);
        let c = BigInt::from(binomial(50, 2));
        let expected = Rational::from_integer(c.pow(3u32)) * q(1, 1000).pow(3);
        assert_eq!(rep.total.exact().unwrap(), expected);
        assert_eq!(rep.reference.exact().unwrap(), q(50, 1000));
    }

    #[test]
    fn zero_probability_gives_zero() {
        let p = Probability::Exact(q(0, 1));
        let rep = expected_cover_bound(30, 5, 2, 4, &p).unwrap();
        assert!(rep.total.exact().unwrap().is_zero());
        assert!(rep.ratio().is_none());
        assert!(rep.to_json().ratio.is_none());
    }

    #[test]
    fn desk_scale_ratio_is_small() {
        let p = "n^-2.75"
            .parse::<ProbabilitySpec>()
            .unwrap()
            .at(200)
            .unwrap();
        let rep = expected_cover_bound(200, 4, 2, 3, &p).unwrap();
        assert_eq!(rep.ratio_below(&q(1, 10)), Some(true));
        // closed form: C(200,2)^3 · 200^(-13/2)
        let approx = 19900f64.powi(3) * 200f64.powf(-6.5);
        let got = rep.to_json().ratio.unwrap();
        assert!((got - approx).abs() < 1e-9 * approx);
    }

    #[test]
    fn parameter_checks() {
        let p = Probability::Exact(q(1, 2));
        assert!(expected_cover_bound(10, 3, 2, 2, &p).is_err());
        assert!(expected_cover_bound(10, 3, 2, 4, &p).is_err());
        assert!(expected_cover_bound(2, 3, 2, 3, &p).is_err());
    }

    #[test]
    fn json_fields() {
        let p = Probability::Exact(q(1, 100));
        let v =
            serde_json::to_value(expected_cover_bound(20, 4, 2, 3, &p).unwrap().to_json()).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
        for k in [
            "n",
            "s",
            "r",
            "t",
            "p",
            "trace_count",
            "bound",
            "reference",
            "ratio",
        ] {
            assert!(keys.contains(&k), "missing {k}");
        }
    }
}
