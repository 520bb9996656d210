//! Sample `H(n, s, p)`, remove the bad configurations, and color the primal
//! graph of what remains.

mod clean;
mod lift;
mod sample;
mod trials;
mod violations;

pub use clean::{clean, CleanReport, CleanReportJson};
pub use lift::lift_coloring;
pub use sample::{sample_hypergraph, sample_hypergraph_with, trial_seed, SamplerConfig};
pub use trials::{
    estimate_cover_count, estimate_overlap_pairs, overlap_pairs_bound, run_trials,
    MonteCarloEstimate, TrialParams, TrialRecord, TrialStats, TrialSummary, CSV_HEADER,
};
pub use violations::{
    conformality_violations, cover_configurations, is_conformal, is_r_linear, linearity_violations,
};
