//! `hyperramsey` command-line front end.
//!
//! Exit codes: 0 success (or "arrows"), 1 "does not arrow", 2 inconclusive,
//! 3 internal contradiction, 64 usage error, 65 malformed input, 74 I/O
//! failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use hyperramsey::arrows::{
    arrows_decision, base_coloring_search, export_cnf, ramsey_number, verify_good_coloring, Budget,
    ColoringCheck, TargetList, Verdict,
};
use hyperramsey::construct::{clean, lift_coloring, run_trials, sample_hypergraph};
use hyperramsey::covers::expected_cover_bound;
use hyperramsey::hypercore::{
    clique_density, format_coloring, max_r_density_with_cap, primal_r_graph, read_hypergraph,
    write_coloring, write_hypergraph, DEFAULT_DENSITY_CAP,
};
use hyperramsey::probability::{Probability, ProbabilitySpec};
use hyperramsey::{Error, Rational, Result};

const EXIT_NOT_ARROWS: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_CONTRADICTION: u8 = 3;
const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;
const EXIT_IO: u8 = 74;

const S_AUTO_TIME_LIMIT: Duration = Duration::from_secs(60);

#[derive(Parser)]
#[command(
    name = "hyperramsey",
    version,
    about = "Primal r-graphs of random hypergraphs and non-arrowing certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Maximum r-density of a hypergraph file, or of a clique K_t^(r).
    Density(DensityArgs),
    /// Sample H(n, s, p), clean it, and report the result.
    Construct(ConstructArgs),
    /// Build G[H0, r] with a lifted coloring and verify it is good.
    Witness(WitnessArgs),
    /// Decide whether a hypergraph arrows a list of cliques.
    Arrow(ArrowArgs),
    /// Least n such that K_n^(r) arrows the targets.
    Ramsey(RamseyArgs),
    /// Repeated sample-and-clean trials with summary statistics.
    Experiment(ExperimentArgs),
}

#[derive(Args)]
struct DensityArgs {
    /// Hypergraph file.
    #[arg(required_unless_present = "clique", conflicts_with = "clique")]
    file: Option<PathBuf>,
    /// Clique as `t,r`.
    #[arg(long, value_name = "T,R")]
    clique: Option<String>,
    /// Refuse inputs with more non-isolated vertices than this.
    #[arg(long, default_value_t = DEFAULT_DENSITY_CAP)]
    cap: usize,
}

#[derive(Args)]
struct SampleArgs {
    #[arg(long)]
    n: usize,
    /// Probability: decimal, `a/b`, or `n^x`.
    #[arg(long)]
    p: String,
    #[arg(long)]
    seed: u64,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(flatten)]
    sample: SampleArgs,
    #[arg(long)]
    s: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    t: usize,
    /// Directory for `report.json` and `h0.uhg`.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct WitnessArgs {
    #[command(flatten)]
    sample: SampleArgs,
    /// Edge size; defaults to R(targets) - 1 with --s-auto.
    #[arg(long, required_unless_present = "s_auto", conflicts_with = "s_auto")]
    s: Option<usize>,
    /// Compute s as the Ramsey number of the targets minus one.
    #[arg(long)]
    s_auto: bool,
    #[arg(long)]
    r: usize,
    /// Clique sizes, one per color, e.g. `3,3`.
    #[arg(long)]
    targets: String,
    /// Search bound for --s-auto.
    #[arg(long, default_value_t = 12)]
    nmax: usize,
    /// Limits for the --s-auto search; without any, 60 seconds.
    #[command(flatten)]
    budget: BudgetArgs,
    /// Directory for `g.uhg`, `coloring.col` and `certificate.json`.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BudgetArgs {
    /// Node limit for the search.
    #[arg(long)]
    budget: Option<u64>,
    /// Time limit in seconds.
    #[arg(long)]
    time_limit: Option<f64>,
}

impl BudgetArgs {
    fn budget(&self) -> Result<Budget> {
        let max_time = match self.time_limit {
            Some(secs) if !(secs.is_finite() && secs > 0.0) => {
                return Err(Error::Parameter(format!(
                    "time limit must be positive, got {secs}"
                )))
            }
            Some(secs) => Some(Duration::from_secs_f64(secs)),
            None => None,
        };
        Ok(Budget {
            max_nodes: self.budget,
            max_time,
        })
    }
}

#[derive(Args)]
struct ArrowArgs {
    /// Host hypergraph file.
    file: PathBuf,
    #[arg(long)]
    targets: String,
    /// Uniformity of the targets; defaults to that of the host.
    #[arg(long)]
    r: Option<usize>,
    /// Also write the DIMACS encoding here.
    #[arg(long)]
    cnf: Option<PathBuf>,
    /// Where to write a good coloring; defaults to the input with extension `.witness.col`.
    #[arg(long)]
    witness: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args)]
struct RamseyArgs {
    #[arg(long)]
    targets: String,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    nmax: usize,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args)]
struct ExperimentArgs {
    #[command(flatten)]
    sample: SampleArgs,
    #[arg(long)]
    s: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    t: usize,
    #[arg(long)]
    trials: u64,
    /// Also evaluate the expected cover-count bound against p n^(s-t).
    #[arg(long, alias = "lemma42")]
    cover_bound: bool,
    /// Per-trial CSV output.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Summary JSON output (also printed to stdout).
    #[arg(long)]
    json: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    let outcome = match cli.command {
        Command::Density(a) => density(a),
        Command::Construct(a) => construct(a),
        Command::Witness(a) => witness(a),
        Command::Arrow(a) => arrow(a),
        Command::Ramsey(a) => ramsey(a),
        Command::Experiment(a) => experiment(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parameter(_)
        | Error::DensityCap { .. }
        | Error::NoneExists { .. }
        | Error::NotLinear { .. } => EXIT_USAGE,
        Error::Parse { .. } => EXIT_DATA,
        Error::Io { .. } => EXIT_IO,
        Error::BudgetExceeded { .. } | Error::NotFound { .. } => EXIT_INCONCLUSIVE,
        Error::InternalContradiction(_) => EXIT_CONTRADICTION,
    }
}

fn parse_pair(text: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parameter(format!("expected `t,r`, got `{text}`"));
    let (a, b) = text.split_once(',').ok_or_else(bad)?;
    Ok((
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    ))
}

fn probability(spec: &str, n: usize) -> Result<Probability> {
    spec.parse::<ProbabilitySpec>()?.at(n as u64)
}

fn check_sizes(n: usize, s: usize, r: usize, t: usize) -> Result<()> {
    if r >= 2 && t > r && s >= t && n >= s {
        Ok(())
    } else {
        Err(Error::Parameter(format!(
            "need n >= s >= t > r >= 2, got n = {n}, s = {s}, t = {t}, r = {r}"
        )))
    }
}

fn create_dir(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|source| Error::Io {
        path: dir.to_path_buf(),
        source,
    })
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn pretty(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn density(a: DensityArgs) -> Result<u8> {
    let (value, witness) = match (&a.clique, &a.file) {
        (Some(spec), _) => {
            let (t, r) = parse_pair(spec)?;
            (clique_density(t, r)?, (1..=t as u32).collect::<Vec<_>>())
        }
        (None, Some(path)) => {
            let f = read_hypergraph(path)?;
            let report = max_r_density_with_cap(&f, a.cap)?;
            (report.density, report.witness)
        }
        (None, None) => unreachable!("clap requires one of them"),
    };
    println!("{value}");
    let verts: Vec<String> = witness.iter().map(|v| v.to_string()).collect();
    println!("witness: {}", verts.join(" "));
    Ok(0)
}

fn construct(a: ConstructArgs) -> Result<u8> {
    let SampleArgs { n, ref p, seed } = a.sample;
    check_sizes(n, a.s, a.r, a.t)?;
    let p = probability(p, n)?;
    let h = sample_hypergraph(n, a.s, p.to_f64(), seed)?;
    let report = clean(&h, a.r, a.t)?;
    let json = json!({
        "p": p.to_string(),
        "seed": seed,
        "report": report.to_json(),
    });
    let text = pretty(&json);
    if let Some(dir) = &a.out {
        create_dir(dir)?;
        write_text(&dir.join("report.json"), &text)?;
        write_hypergraph(&report.result, dir.join("h0.uhg"))?;
    }
    println!("{text}");
    Ok(0)
}

fn witness(a: WitnessArgs) -> Result<u8> {
    let SampleArgs { n, ref p, seed } = a.sample;
    let targets = TargetList::parse(a.r, &a.targets)?;
    let s = match a.s {
        Some(s) => s,
        None => {
            let mut budget = a.budget.budget()?;
            if budget == Budget::unlimited() {
                budget.max_time = Some(S_AUTO_TIME_LIMIT);
            }
            ramsey_number(&targets, a.nmax, budget)? - 1
        }
    };
    let t = *targets.sizes().iter().min().expect("targets are non-empty");
    check_sizes(n, s, a.r, t)?;
    let base = base_coloring_search(s, &targets)?;
    let p = probability(p, n)?;
    let h = sample_hypergraph(n, s, p.to_f64(), seed)?;
    let report = clean(&h, a.r, t)?;
    let h0 = &report.result;
    let coloring = lift_coloring(h0, a.r, &base)?;
    let g = primal_r_graph(h0, a.r)?;
    let check = verify_good_coloring(&g, &coloring, &targets)?;
    if let ColoringCheck::Violation { color, vertices } = &check {
        return Err(Error::InternalContradiction(format!(
            "lifted coloring has a monochromatic K_{} in color {color} on {vertices:?}",
            targets.size_for(*color)
        )));
    }
    let certificate = json!({
        "n": n,
        "s": s,
        "r": a.r,
        "targets": targets.sizes(),
        "p": p.to_string(),
        "seed": seed,
        "e_H": h.edge_count(),
        "e_H0": h0.edge_count(),
        "e_G": g.edge_count(),
        "x": report.x(),
        "y": report.y(),
        "verified": check.is_good(),
        "check": check,
    });
    let text = pretty(&certificate);
    if let Some(dir) = &a.out {
        create_dir(dir)?;
        write_hypergraph(&g, dir.join("g.uhg"))?;
        write_coloring(&coloring, dir.join("coloring.col"))?;
        write_text(&dir.join("certificate.json"), &text)?;
    }
    println!("{text}");
    Ok(0)
}

fn arrow(a: ArrowArgs) -> Result<u8> {
    let g = read_hypergraph(&a.file)?;
    let targets = TargetList::parse(a.r.unwrap_or(g.k()), &a.targets)?;
    let budget = a.budget.budget()?;
    if let Some(path) = &a.cnf {
        write_text(path, &export_cnf(&g, &targets)?)?;
    }
    let result = match arrows_decision(&g, &targets, budget) {
        Ok(result) => result,
        Err(Error::BudgetExceeded { nodes }) => {
            println!(
                "{}",
                pretty(&json!({ "verdict": "inconclusive", "nodes_explored": nodes }))
            );
            return Ok(EXIT_INCONCLUSIVE);
        }
        Err(e) => return Err(e),
    };
    let mut summary = json!({
        "verdict": result.verdict,
        "nodes_explored": result.nodes_explored,
        "exhausted": result.exhausted,
    });
    if let Some(coloring) = &result.witness {
        let path = a
            .witness
            .clone()
            .unwrap_or_else(|| a.file.with_extension("witness.col"));
        write_text(&path, &format_coloring(coloring))?;
        summary["witness"] = json!(path.display().to_string());
    }
    println!("{}", pretty(&summary));
    // wall-clock time stays off stdout so reports are reproducible
    eprintln!("search time: {:.3} ms", result.elapsed.as_secs_f64() * 1e3);
    Ok(match result.verdict {
        Verdict::Arrows => 0,
        Verdict::NotArrows => EXIT_NOT_ARROWS,
    })
}

fn ramsey(a: RamseyArgs) -> Result<u8> {
    let targets = TargetList::parse(a.r, &a.targets)?;
    let n = ramsey_number(&targets, a.nmax, a.budget.budget()?)?;
    println!("{n}");
    Ok(0)
}

fn experiment(a: ExperimentArgs) -> Result<u8> {
    let SampleArgs { n, ref p, seed } = a.sample;
    check_sizes(n, a.s, a.r, a.t)?;
    let p = probability(p, n)?;
    let stats = run_trials(n, a.s, a.r, a.t, &p, a.trials, seed)?;
    let mut out = json!({ "params": stats.params, "summary": stats.summary });
    if a.cover_bound {
        let bound = expected_cover_bound(n as u64, a.s, a.r, a.t, &p)?;
        let below = bound.ratio_below(&Rational::new(1.into(), 10.into()));
        let mut v = serde_json::to_value(bound.to_json()).expect("serializable");
        v["ratio_below_0_1"] = json!(below);
        out["cover_bound"] = v;
    }
    if let Some(path) = &a.csv {
        write_text(path, &stats.csv_string())?;
    }
    let text = pretty(&out);
    if let Some(path) = &a.json {
        write_text(path, &text)?;
    }
    println!("{text}");
    Ok(0)
}
