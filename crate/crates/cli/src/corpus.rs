//! `corpus`: run one suite over every graph file of a directory.

use std::fs;
use std::path::{Path, PathBuf};
use std::thread;

use anyhow::{Context, Result};
use clap::ValueEnum;
use serde_json::{json, Value};
use strongodd::coloring::bounds_report;
use strongodd::configurations::{discharging_bound_check, scan, theorem_check, BoundStatus, Pattern, PatternParams, RuleSet};
use strongodd::graph::io::{to_graph6, EdgeListFile};
use strongodd::Error;

use crate::load_graph;
use crate::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// χ <= χ_o <= χ_so <= χ(G²) <= Δ² + 1, with equality of the last two
    /// on claw-free graphs.
    Chain,
    /// Every applicable upper bound on χ_so holds.
    Theorems,
    /// Ledgers balance and no configuration-free graph ends below the bound.
    Discharge,
    /// `# expect: <pattern> <count>` annotations match a scan (`# c: N`
    /// binds the lemma parameter, default 3).
    Fixtures,
}

enum Outcome {
    Pass(Value),
    Fail(String, Value),
    Skip(String),
}

fn is_graph_file(p: &Path) -> bool {
    p.is_file() && p.extension().is_some_and(|e| e == "edges" || e == "g6")
}

fn c_param(text: &str) -> Result<Option<usize>> {
    for (i, line) in text.lines().enumerate() {
        if let Some(v) = line.trim().strip_prefix("# c:") {
            let c = v.trim().parse().map_err(|_| Error::Parse { line: i + 1, message: format!("bad `# c:` value `{}`", v.trim()) })?;
            return Ok(Some(c));
        }
    }
    Ok(None)
}

fn check(suite: Suite, file: &EdgeListFile, text: &str, guard: usize) -> Result<Outcome> {
    let g = &file.graph;
    let guarded = |e: Error| match e {
        Error::SizeGuard { .. } => Ok(Outcome::Skip(e.to_string())),
        e => Err(e.into()),
    };
    match suite {
        Suite::Chain => match bounds_report(g, guard) {
            Ok(r) if r.ok => Ok(Outcome::Pass(serde_json::to_value(r)?)),
            Ok(r) => Ok(Outcome::Fail("chain or claw-free equality broken".into(), serde_json::to_value(r)?)),
            Err(e) => guarded(e),
        },
        Suite::Theorems => match theorem_check::<i64>(g, guard) {
            Ok(r) => {
                let detail = json!({ "chi_so": r.chi_so, "verdicts": r.verdicts });
                Ok(if r.ok() { Outcome::Pass(detail) } else { Outcome::Fail("an applicable bound is exceeded".into(), detail) })
            }
            Err(e) => guarded(e),
        },
        Suite::Discharge => {
            let mut rows = Vec::new();
            let mut failed = Vec::new();
            for rules in RuleSet::ALL {
                let r = discharging_bound_check::<i64>(g, rules, rules.catalog().patterns(), &PatternParams::default(), rules.bound())?;
                let consistent = r.ledger.is_consistent();
                if !consistent {
                    failed.push(format!("{rules}: ledger does not balance"));
                }
                if r.status == BoundStatus::RedFlag {
                    failed.push(format!("{rules}: vertices {:?} end below the bound", r.below_bound));
                }
                rows.push(json!({ "rules": rules.id(), "status": r.status, "consistent": consistent, "below_bound": r.below_bound }));
            }
            let detail = Value::Array(rows);
            Ok(if failed.is_empty() { Outcome::Pass(detail) } else { Outcome::Fail(failed.join("; "), detail) })
        }
        Suite::Fixtures => {
            if file.expectations.is_empty() {
                return Ok(Outcome::Skip("no expectations".into()));
            }
            let params = PatternParams { delta: None, c: Some(c_param(text)?.unwrap_or(3)) };
            let matches = scan(g, &Pattern::ALL, &params)?;
            let mut rows = Vec::new();
            let mut failed = Vec::new();
            for e in &file.expectations {
                let p: Pattern = e.pattern.parse().map_err(|err| anyhow::anyhow!("line {}: {err}", e.line))?;
                let got = matches.iter().filter(|m| m.pattern == p).count();
                if got != e.count {
                    failed.push(format!("line {}: {} expected {} got {got}", e.line, e.pattern, e.count));
                }
                rows.push(json!({ "pattern": e.pattern, "expected": e.count, "found": got }));
            }
            let detail = Value::Array(rows);
            Ok(if failed.is_empty() { Outcome::Pass(detail) } else { Outcome::Fail(failed.join("; "), detail) })
        }
    }
}

pub fn run(dir: &Path, suite: Suite, guard: usize) -> Result<Report> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("reading directory {}", dir.display()))?
        .map(|e| e.map(|e| e.path()))
        .collect::<std::io::Result<_>>()?;
    paths.retain(|p| is_graph_file(p));
    paths.sort();
    // parse everything first so input errors abort before any work
    let files = paths.iter().map(|p| load_graph(p)).collect::<Result<Vec<_>>>()?;

    let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(files.len().max(1));
    let mut outcomes: Vec<Option<Result<Outcome>>> = (0..files.len()).map(|_| None).collect();
    thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let files = &files;
                s.spawn(move || {
                    (w..files.len()).step_by(workers).map(|i| (i, check(suite, &files[i].0, &files[i].1, guard))).collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for (i, o) in h.join().expect("corpus worker panicked") {
                outcomes[i] = Some(o);
            }
        }
    });

    let (mut passed, mut failed, mut skipped) = (0, 0, 0);
    let mut failures = Vec::new();
    let mut graphs = Vec::new();
    for ((path, (file, _)), outcome) in paths.iter().zip(&files).zip(outcomes) {
        let name = path.file_name().map(|s| s.to_string_lossy().to_string()).unwrap_or_default();
        let digest = to_graph6(&file.graph);
        let (status, reason, detail) = match outcome.expect("every file is checked")? {
            Outcome::Pass(d) => {
                passed += 1;
                ("pass", None, d)
            }
            Outcome::Fail(why, d) => {
                failed += 1;
                failures.push(json!({ "file": name, "graph6": digest, "reason": why }));
                ("fail", Some(why), d)
            }
            Outcome::Skip(why) => {
                skipped += 1;
                ("skip", Some(why), Value::Null)
            }
        };
        graphs.push(json!({
            "file": name,
            "graph6": digest,
            "n": file.graph.n(),
            "m": file.graph.m(),
            "status": status,
            "reason": reason,
            "detail": detail,
        }));
    }
    let inputs = json!({ "dir": dir.display().to_string(), "files": files.len() });
    let results = json!({
        "suite": suite.to_possible_value().map(|v| v.get_name().to_string()),
        "total": files.len(),
        "passed": passed,
        "failed": failed,
        "skipped": skipped,
        "failures": failures,
        "graphs": graphs,
    });
    Ok(Report::new("corpus", inputs, results).with_ok(failed == 0))
}
