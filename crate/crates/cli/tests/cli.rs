use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hyperramsey::arrows::{verify_good_coloring, TargetList};
use hyperramsey::construct::is_r_linear;
use hyperramsey::hypercore::{read_coloring_for, read_hypergraph, write_hypergraph};
use hyperramsey::UniformHypergraph;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperramsey"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../docs/schemas")
        .join(name);
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

fn assert_valid(name: &str, doc: &Value) {
    let v = schema(name);
    let errors: Vec<String> = v.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{name}: {errors:?}\n{doc:#}");
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).expect("stdout is JSON")
}

fn complete_file(dir: &Path, n: usize) -> PathBuf {
    let path = dir.join(format!("k{n}.uhg"));
    write_hypergraph(&UniformHypergraph::complete(n, 2).unwrap(), &path).unwrap();
    path
}

#[test]
fn density_of_cliques_and_files() {
    let out = run(&["density", "--clique", "3,2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().next(), Some("2"));
    let out = run(&["density", "--clique", "4,2"]);
    assert_eq!(
        stdout(&out).lines().collect::<Vec<_>>(),
        ["5/2", "witness: 1 2 3 4"]
    );

    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.uhg");
    std::fs::write(&empty, "uhg 4 2\n").unwrap();
    let out = run(&["density", empty.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().next(), Some("0"));

    let k5 = complete_file(dir.path(), 5);
    let out = run(&["density", k5.to_str().unwrap()]);
    assert_eq!(stdout(&out).lines().next(), Some("3"));
}

#[test]
fn malformed_input_and_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.uhg");
    std::fs::write(&bad, "uhg 4 2\n2 1\n").unwrap();
    assert_eq!(code(&run(&["density", bad.to_str().unwrap()])), 65);
    assert_eq!(
        code(&run(&[
            "density",
            dir.path().join("missing.uhg").to_str().unwrap()
        ])),
        74
    );
    assert_eq!(code(&run(&["density", "--clique", "3"])), 64);
    assert_eq!(code(&run(&["density"])), 64);
    assert_eq!(code(&run(&["frobnicate"])), 64);
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["construct", "--help"])), 0);
}

#[test]
fn ramsey_numbers() {
    let out = run(&["ramsey", "--targets", "3,3", "--r", "2", "--nmax", "8"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "6");
    let out = run(&["ramsey", "--targets", "3,3", "--r", "2", "--nmax", "5"]);
    assert_eq!(code(&out), 2);
    let out = run(&["ramsey", "--targets", "2,3", "--r", "2", "--nmax", "5"]);
    assert_eq!(code(&out), 64);
}

#[test]
fn arrow_verdicts_witnesses_and_cnf() {
    let dir = tempfile::tempdir().unwrap();
    let k5 = complete_file(dir.path(), 5);
    let out = run(&["arrow", k5.to_str().unwrap(), "--targets", "3,3"]);
    assert_eq!(code(&out), 1);
    let doc = json(&out);
    assert_valid("arrow-result.schema.json", &doc);
    assert_eq!(doc["verdict"], "not_arrows");
    let again = run(&["arrow", k5.to_str().unwrap(), "--targets", "3,3"]);
    assert_eq!(again.stdout, out.stdout);
    let witness = PathBuf::from(doc["witness"].as_str().unwrap());
    let host = read_hypergraph(&k5).unwrap();
    let coloring = read_coloring_for(&witness, &host).unwrap();
    let targets = TargetList::new(2, vec![3, 3]).unwrap();
    assert!(verify_good_coloring(&host, &coloring, &targets)
        .unwrap()
        .is_good());

    let k6 = complete_file(dir.path(), 6);
    let cnf = dir.path().join("k6.cnf");
    let out = run(&[
        "arrow",
        k6.to_str().unwrap(),
        "--targets",
        "3,3",
        "--cnf",
        cnf.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_valid("arrow-result.schema.json", &doc);
    assert_eq!(doc["verdict"], "arrows");
    assert_eq!(doc["exhausted"], true);
    let text = std::fs::read_to_string(&cnf).unwrap();
    // 15 edges, 2 colors: 15 + 15 + 2 * 20 clauses
    assert!(text.lines().any(|l| l == "p cnf 30 70"));

    let out = run(&[
        "arrow",
        k6.to_str().unwrap(),
        "--targets",
        "3,3",
        "--budget",
        "10",
    ]);
    assert_eq!(code(&out), 2);
    let doc = json(&out);
    assert_valid("arrow-result.schema.json", &doc);
    assert_eq!(doc["verdict"], "inconclusive");
}

#[test]
fn construct_reports_and_files() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("run");
    let out = run(&[
        "construct",
        "--n",
        "2000",
        "--s",
        "5",
        "--r",
        "2",
        "--t",
        "3",
        "--p",
        "n^-4",
        "--seed",
        "1",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_valid("construct-report.schema.json", &doc);
    let saved: Value =
        serde_json::from_str(&std::fs::read_to_string(out_dir.join("report.json")).unwrap())
            .unwrap();
    assert_eq!(saved, doc);
    let h0 = read_hypergraph(out_dir.join("h0.uhg")).unwrap();
    assert!(is_r_linear(&h0, 2).unwrap());
    assert_eq!(
        doc["report"]["result_edges"].as_u64().unwrap() as usize,
        h0.edge_count()
    );

    let out = run(&[
        "construct",
        "--n",
        "30",
        "--s",
        "4",
        "--r",
        "2",
        "--t",
        "3",
        "--p",
        "0",
        "--seed",
        "3",
    ]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_valid("construct-report.schema.json", &doc);
    for key in ["input_edges", "x", "y", "deleted_count", "result_edges"] {
        assert_eq!(doc["report"][key], 0, "{key}");
    }

    let out = run(&[
        "construct",
        "--n",
        "30",
        "--s",
        "4",
        "--r",
        "3",
        "--t",
        "3",
        "--p",
        "0.1",
        "--seed",
        "3",
    ]);
    assert_eq!(code(&out), 64);
    let out = run(&[
        "construct",
        "--n",
        "30",
        "--s",
        "4",
        "--r",
        "2",
        "--t",
        "3",
        "--p",
        "0.1",
    ]);
    assert_eq!(code(&out), 64, "seed is required");
    let out = run(&[
        "construct",
        "--n",
        "30",
        "--s",
        "4",
        "--r",
        "2",
        "--t",
        "3",
        "--p",
        "3/2",
        "--seed",
        "1",
    ]);
    assert_eq!(code(&out), 64);
}

#[test]
fn witness_bundles() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("w");
    let out = run(&[
        "witness",
        "--n",
        "2000",
        "--s-auto",
        "--r",
        "2",
        "--targets",
        "3,3",
        "--p",
        "n^-4",
        "--seed",
        "4",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let doc = json(&out);
    assert_valid("witness-certificate.schema.json", &doc);
    assert_eq!(doc["s"], 5);
    let g = read_hypergraph(out_dir.join("g.uhg")).unwrap();
    let c = read_coloring_for(out_dir.join("coloring.col"), &g).unwrap();
    let targets = TargetList::new(2, vec![3, 3]).unwrap();
    assert!(verify_good_coloring(&g, &c, &targets).unwrap().is_good());
    assert_eq!(doc["e_G"].as_u64().unwrap() as usize, g.edge_count());

    let out = run(&[
        "witness",
        "--n",
        "50",
        "--s",
        "6",
        "--r",
        "2",
        "--targets",
        "3,3",
        "--p",
        "0",
        "--seed",
        "1",
    ]);
    assert_ne!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stderr).contains("no good coloring"));

    let out = run(&[
        "witness",
        "--n",
        "50",
        "--s",
        "5",
        "--r",
        "2",
        "--targets",
        "3,3",
        "--p",
        "0",
        "--seed",
        "1",
    ]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_valid("witness-certificate.schema.json", &doc);
    assert_eq!(doc["e_G"], 0);
    assert_eq!(doc["verified"], true);
}

#[test]
fn experiments_csv_json_and_bound() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("t.csv");
    let out = run(&[
        "experiment",
        "--n",
        "40",
        "--s",
        "4",
        "--r",
        "2",
        "--t",
        "3",
        "--p",
        "0",
        "--trials",
        "1",
        "--seed",
        "2",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert_valid("experiment-summary.schema.json", &json(&out));
    let text = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "seed,e_H,X,Y,deleted,e_H0");
    assert_eq!(lines.len(), 2);
    assert!(lines[1].ends_with(",0,0,0,0,0"), "{}", lines[1]);

    let out = run(&[
        "experiment",
        "--n",
        "200",
        "--s",
        "4",
        "--r",
        "2",
        "--t",
        "3",
        "--p",
        "n^-2.75",
        "--trials",
        "4",
        "--seed",
        "2",
        "--cover-bound",
    ]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_valid("experiment-summary.schema.json", &doc);
    assert!(doc["cover_bound"]["ratio"].as_f64().unwrap() < 0.1);
    assert_eq!(doc["cover_bound"]["ratio_below_0_1"], true);
}

#[test]
fn randomized_verbs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = |csv: &Path| {
        vec![
            "experiment".to_string(),
            "--n".into(),
            "300".into(),
            "--s".into(),
            "4".into(),
            "--r".into(),
            "2".into(),
            "--t".into(),
            "3".into(),
            "--p".into(),
            "n^-2.5".into(),
            "--trials".into(),
            "16".into(),
            "--seed".into(),
            "9".into(),
            "--csv".into(),
            csv.to_str().unwrap().into(),
        ]
    };
    let a_csv = dir.path().join("a.csv");
    let b_csv = dir.path().join("b.csv");
    let a = Command::new(env!("CARGO_BIN_EXE_hyperramsey"))
        .args(args(&a_csv))
        .output()
        .unwrap();
    let b = Command::new(env!("CARGO_BIN_EXE_hyperramsey"))
        .args(args(&b_csv))
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(std::fs::read(a_csv).unwrap(), std::fs::read(b_csv).unwrap());

    let construct = [
        "construct",
        "--n",
        "500",
        "--s",
        "4",
        "--r",
        "2",
        "--t",
        "3",
        "--p",
        "n^-2.6",
        "--seed",
        "5",
    ];
    assert_eq!(run(&construct).stdout, run(&construct).stdout);
    let witness = [
        "witness",
        "--n",
        "500",
        "--s",
        "5",
        "--r",
        "2",
        "--targets",
        "3,3",
        "--p",
        "n^-3.5",
        "--seed",
        "5",
    ];
    assert_eq!(run(&witness).stdout, run(&witness).stdout);
}
