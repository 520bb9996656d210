use std::io::Write;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::clean::clean;
use super::sample::{sample_hypergraph, trial_seed};
use super::violations::linearity_violations;
use crate::covers::enumerate_minimal_nontrivial_covers;
use crate::error::{Error, Result};
use crate::hypercore::{binomial, intersection_size, Rational, Vertex, VertexSet};
use crate::probability::{PowerSum, Probability};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialParams {
    pub n: usize,
    pub s: usize,
    pub r: usize,
    pub t: usize,
    pub p: String,
    pub p_value: f64,
    pub trials: u64,
    pub master_seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialRecord {
    pub index: u64,
    pub seed: u64,
    pub e_h: usize,
    pub x: usize,
    pub y: usize,
    pub deleted: usize,
    pub e_h0: usize,
}

impl TrialRecord {
    pub fn deleted_fraction(&self) -> f64 {
        if self.e_h == 0 {
            0.0
        } else {
            self.deleted as f64 / self.e_h as f64
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialSummary {
    pub mean_e_h: f64,
    pub mean_x: f64,
    pub mean_y: f64,
    pub mean_deleted: f64,
    pub mean_e_h0: f64,
    /// Per-trial `deleted / e(H)` averaged over trials (0 for empty `H`).
    pub mean_deleted_fraction: f64,
    /// `(mean X + mean Y) / mean e(H)`; absent when no trial had edges.
    pub ratio: Option<f64>,
}

impl TrialSummary {
    pub fn from_records(records: &[TrialRecord]) -> Self {
        let count = records.len().max(1) as f64;
        let mean =
            |f: fn(&TrialRecord) -> usize| records.iter().map(|r| f(r) as f64).sum::<f64>() / count;
        let mean_e_h = mean(|r| r.e_h);
        let mean_x = mean(|r| r.x);
        let mean_y = mean(|r| r.y);
        Self {
            mean_e_h,
            mean_x,
            mean_y,
            mean_deleted: mean(|r| r.deleted),
            mean_e_h0: mean(|r| r.e_h0),
            mean_deleted_fraction: records
                .iter()
                .map(TrialRecord::deleted_fraction)
                .sum::<f64>()
                / count,
            ratio: (mean_e_h > 0.0).then(|| (mean_x + mean_y) / mean_e_h),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialStats {
    pub params: TrialParams,
    pub summary: TrialSummary,
    #[serde(skip)]
    pub records: Vec<TrialRecord>,
}

pub const CSV_HEADER: [&str; 6] = ["seed", "e_H", "X", "Y", "deleted", "e_H0"];

impl TrialStats {
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let to_err = |e: csv::Error| Error::param(format!("csv output failed: {e}"));
        w.write_record(CSV_HEADER).map_err(to_err)?;
        for r in &self.records {
            w.write_record([
                r.seed.to_string(),
                r.e_h.to_string(),
                r.x.to_string(),
                r.y.to_string(),
                r.deleted.to_string(),
                r.e_h0.to_string(),
            ])
            .map_err(to_err)?;
        }
        w.flush()
            .map_err(|e| Error::param(format!("csv output failed: {e}")))?;
        Ok(())
    }

    pub fn csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv is utf-8")
    }

    pub fn summary_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

/// Runs `trials` independent sample-and-clean rounds. Trial `i` uses the
/// seed `trial_seed(master_seed, i)`; trials run in parallel and are
/// collected by index, so the output does not depend on scheduling.
pub fn run_trials(
    n: usize,
    s: usize,
    r: usize,
    t: usize,
    p: &Probability,
    trials: u64,
    master_seed: u64,
) -> Result<TrialStats> {
    if !(r >= 2 && t > r && s >= t && n >= s) {
        return Err(Error::param(format!(
            "need n >= s >= t > r >= 2, got n = {n}, s = {s}, t = {t}, r = {r}"
        )));
    }
    if trials == 0 {
        return Err(Error::param("at least one trial is required"));
    }
    let p_value = p.to_f64();
    let records = (0..trials)
        .into_par_iter()
        .map(|index| {
            let seed = trial_seed(master_seed, index);
            let h = sample_hypergraph(n, s, p_value, seed)?;
            let rep = clean(&h, r, t)?;
            Ok(TrialRecord {
                index,
                seed,
                e_h: h.edge_count(),
                x: rep.x(),
                y: rep.y(),
                deleted: rep.deleted.len(),
                e_h0: rep.result.edge_count(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TrialStats {
        params: TrialParams {
            n,
            s,
            r,
            t,
            p: p.to_string(),
            p_value,
            trials,
            master_seed,
        },
        summary: TrialSummary::from_records(&records),
        records,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonteCarloEstimate {
    pub samples: u64,
    pub mean: f64,
    pub std_error: f64,
}

impl MonteCarloEstimate {
    pub fn from_counts(counts: &[usize]) -> Self {
        let m = counts.len() as f64;
        let mean = counts.iter().map(|&c| c as f64).sum::<f64>() / m;
        let var = if counts.len() > 1 {
            counts
                .iter()
                .map(|&c| (c as f64 - mean).powi(2))
                .sum::<f64>()
                / (m - 1.0)
        } else {
            0.0
        };
        Self {
            samples: counts.len() as u64,
            mean,
            std_error: (var / m).sqrt(),
        }
    }
}

fn sampled_counts(
    n: usize,
    s: usize,
    p: f64,
    samples: u64,
    seed: u64,
    count: impl Fn(&crate::hypercore::UniformHypergraph) -> Result<usize> + Sync,
) -> Result<MonteCarloEstimate> {
    if samples == 0 {
        return Err(Error::param("at least one sample is required"));
    }
    let counts = (0..samples)
        .into_par_iter()
        .map(|i| count(&sample_hypergraph(n, s, p, trial_seed(seed, i))?))
        .collect::<Result<Vec<_>>>()?;
    Ok(MonteCarloEstimate::from_counts(&counts))
}

/// Monte Carlo estimate of the expected number of minimal non-trivial
/// r-covers of `W = {1..t}` by edges of `H(n, s, p)`.
pub fn estimate_cover_count(
    n: usize,
    s: usize,
    r: usize,
    t: usize,
    p: f64,
    samples: u64,
    seed: u64,
) -> Result<MonteCarloEstimate> {
    if !(r >= 2 && t > r && s >= t) {
        return Err(Error::param(format!(
            "need s >= t > r >= 2, got s = {s}, t = {t}, r = {r}"
        )));
    }
    let w: VertexSet = (1..=t as Vertex).collect();
    sampled_counts(n, s, p, samples, seed, |h| {
        let candidates: Vec<VertexSet> = h
            .edges()
            .iter()
            .filter(|e| intersection_size(e, &w) >= r)
            .cloned()
            .collect();
        Ok(enumerate_minimal_nontrivial_covers(&w, &candidates, r)?.len())
    })
}

/// Monte Carlo estimate of the expected number of edge pairs of
/// `H(n, s, p)` sharing at least `r` vertices.
pub fn estimate_overlap_pairs(
    n: usize,
    s: usize,
    r: usize,
    p: f64,
    samples: u64,
    seed: u64,
) -> Result<MonteCarloEstimate> {
    sampled_counts(n, s, p, samples, seed, |h| {
        Ok(linearity_violations(h, r)?.len())
    })
}

/// `C(n, s) · C(s, r) · C(n, s - r) · p^2`, an upper bound on the expected
/// number of overlapping pairs.
pub fn overlap_pairs_bound(n: u64, s: usize, r: usize, p: &Probability) -> PowerSum {
    let coeff = binomial(n, s as u64) * binomial(s as u64, r as u64) * binomial(n, (s - r) as u64);
    p.pow(2).scale(&Rational::from_integer(BigInt::from(coeff)))
}
