use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_strongodd")).current_dir(dir).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn without_timing(mut v: Value) -> Value {
    v["meta"]["timing"] = Value::Null;
    v
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn mad_of_path() {
    let d = TempDir::new().unwrap();
    assert_eq!(code(&run(d.path(), &["gen", "path", "4", "-o", "p4.edges"])), 0);
    let out = run(d.path(), &["mad", "p4.edges"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["results"]["mad"], "3/2");
    assert_eq!(v["inputs"]["n"], 4);
    assert_eq!(v["command"], "mad");
}

#[test]
fn petersen_strong_odd_is_six_and_witness_verifies() {
    let d = TempDir::new().unwrap();
    run(d.path(), &["gen", "petersen", "-o", "petersen.g6"]);
    let out = run(d.path(), &["chromatic", "petersen.g6", "--kind", "strong-odd", "-o", "w.col"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["results"]["k"], 6);
    assert_eq!(code(&run(d.path(), &["verify", "petersen.g6", "w.col", "--kind", "strong-odd"])), 0);
    let capped = run(d.path(), &["chromatic", "petersen.g6", "--kind", "strong-odd", "--max-k", "5"]);
    assert_eq!(code(&capped), 1);
    assert_eq!(json(&capped)["results"]["k"], Value::Null);
}

#[test]
fn verify_reports_even_counts_on_c4() {
    let d = TempDir::new().unwrap();
    run(d.path(), &["gen", "cycle", "4", "-o", "c4.edges"]);
    fs::write(d.path().join("bad.col"), "0 1\n1 2\n2 1\n3 2\n").unwrap();
    let out = run(d.path(), &["verify", "c4.edges", "bad.col", "--kind", "strong-odd"]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    let violations = v["results"]["violations"].as_array().unwrap();
    assert_eq!(violations.len(), 4);
    assert!(violations.iter().all(|x| x["count"] == 2));
    // the same coloring is proper
    assert_eq!(code(&run(d.path(), &["verify", "c4.edges", "bad.col", "--kind", "proper"])), 0);
}

#[test]
fn generated_graphs_feed_every_consumer() {
    let d = TempDir::new().unwrap();
    for (family, params, file) in [
        ("random", vec!["9", "0.4"], "r.edges"),
        ("complete-bipartite", vec!["2", "3"], "k23.g6"),
        ("rook", vec!["3"], "rook.edges"),
    ] {
        let mut args = vec!["gen", family];
        args.extend(params.iter());
        args.extend(["--seed", "7", "-o", file]);
        assert_eq!(code(&run(d.path(), &args)), 0, "{family}");
        for cmd in [
            vec!["mad", file],
            vec!["girth", file],
            vec!["square", file, "-o", "sq.edges"],
            vec!["product", file, file, "-o", "prod.edges"],
            vec!["chromatic", file, "--kind", "odd"],
            vec!["bounds", file],
            vec!["scan", file, "--catalog", "s3"],
            vec!["discharge", file, "--rules", "s4.1"],
            vec!["check-theorems", file],
            vec!["export-cnf", file, "--k", "3", "-o", "f.cnf"],
        ] {
            let out = run(d.path(), &cmd);
            assert!(code(&out) <= 1, "{cmd:?}: {}", String::from_utf8_lossy(&out.stderr));
            json(&out);
        }
    }
}

#[test]
fn stdout_graph_round_trips() {
    let d = TempDir::new().unwrap();
    let out = run(d.path(), &["gen", "cycle", "5"]);
    assert_eq!(code(&out), 0);
    fs::write(d.path().join("c5.edges"), &out.stdout).unwrap();
    assert_eq!(json(&run(d.path(), &["girth", "c5.edges"]))["results"]["girth"], 5);
}

#[test]
fn deterministic_apart_from_timing() {
    let d = TempDir::new().unwrap();
    run(d.path(), &["gen", "random", "10", "0.3", "--seed", "11", "-o", "a.edges"]);
    run(d.path(), &["gen", "random", "10", "0.3", "--seed", "11", "-o", "b.edges"]);
    assert_eq!(fs::read(d.path().join("a.edges")).unwrap(), fs::read(d.path().join("b.edges")).unwrap());
    let a = without_timing(json(&run(d.path(), &["bounds", "a.edges"])));
    let b = without_timing(json(&run(d.path(), &["bounds", "a.edges"])));
    assert_eq!(a, b);
}

#[test]
fn usage_and_input_errors_exit_two() {
    let d = TempDir::new().unwrap();
    assert_eq!(code(&run(d.path(), &["mad"])), 2);
    assert_eq!(code(&run(d.path(), &["gen", "nope"])), 2);
    assert_eq!(code(&run(d.path(), &["mad", "missing.edges"])), 2);
    fs::write(d.path().join("bad.edges"), "3 2\n0 1\n1 2 7\n").unwrap();
    let out = run(d.path(), &["mad", "bad.edges"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    assert_eq!(code(&run(d.path(), &["chromatic", "bad.edges", "--kind", "bogus"])), 2);
}

#[test]
fn size_guard_names_override() {
    let d = TempDir::new().unwrap();
    run(d.path(), &["gen", "cycle", "20", "-o", "c20.edges"]);
    let out = run(d.path(), &["bounds", "c20.edges"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--guard-override"));
    assert_eq!(code(&run(d.path(), &["bounds", "c20.edges", "--guard-override", "20"])), 0);
}

#[test]
fn oddrep_solution_and_trace() {
    let d = TempDir::new().unwrap();
    fs::write(d.path().join("i.json"), r#"{"sets": [[1, 2, 3], [2, 3, 4], [1, 4, 5]], "anchor": 5}"#).unwrap();
    let out = run(d.path(), &["oddrep", "i.json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["results"]["verdict"]["ok"], true);
    assert_eq!(v["results"]["trace"]["ordering"][0], 5);
    fs::write(d.path().join("bad.json"), r#"{"sets": [[2], [5]], "anchor": 5}"#).unwrap();
    assert_eq!(code(&run(d.path(), &["oddrep", "bad.json"])), 2);
}

#[test]
fn scan_needs_c_for_lemma_catalog() {
    let d = TempDir::new().unwrap();
    run(d.path(), &["gen", "petersen", "-o", "p.g6"]);
    assert_eq!(code(&run(d.path(), &["scan", "p.g6", "--catalog", "lemma2.4"])), 2);
    let out = run(d.path(), &["scan", "p.g6", "--catalog", "lemma2.4", "--c", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["results"]["count"], 0);
}

#[test]
fn discharge_ledger_uses_fractions() {
    let d = TempDir::new().unwrap();
    fs::write(d.path().join("g.edges"), "6 8\n0 1\n1 2\n0 3\n0 4\n3 4\n3 5\n4 5\n5 2\n").unwrap();
    let v = json(&run(d.path(), &["discharge", "g.edges", "--rules", "s3"]));
    let r = &v["results"];
    assert_eq!(r["bound"], "20/7");
    assert_eq!(r["ledger"]["consistent"], true);
    assert_eq!(r["ledger"]["total_initial"], r["ledger"]["total_final"]);
}

#[test]
fn corpus_suites_over_fixtures() {
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures");
    let d = TempDir::new().unwrap();
    for suite in ["chain", "theorems", "discharge", "fixtures"] {
        let out = run(d.path(), &["corpus", fixtures.to_str().unwrap(), "--suite", suite]);
        let v = json(&out);
        assert_eq!(code(&out), 0, "{suite}: {}", v["results"]["failures"]);
        assert_eq!(v["results"]["failed"], 0);
    }
    // a wrong expectation is reported with the graph's digest
    fs::write(d.path().join("p3.edges"), "3 2\n0 1\n1 2\n# expect: S3-C1 5\n").unwrap();
    let out = run(d.path(), &["corpus", d.path().to_str().unwrap(), "--suite", "fixtures"]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["results"]["failures"][0]["graph6"], "Bg");
}

#[test]
fn pretty_output_is_text() {
    let d = TempDir::new().unwrap();
    run(d.path(), &["gen", "path", "3", "-o", "p3.edges"]);
    let out = run(d.path(), &["--pretty", "mad", "p3.edges"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.lines().any(|l| l.starts_with("results.mad") && l.ends_with("4/3")));
}
