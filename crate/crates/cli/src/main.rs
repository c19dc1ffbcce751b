mod corpus;
mod report;

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use strongodd::coloring::cnf::export_cnf;
use strongodd::coloring::{bounds_report, chromatic_with, verify, Coloring, ColoringKind, SolverOptions, DEFAULT_SIZE_GUARD};
use strongodd::configurations::{discharging_bound_check, scan_catalog, theorem_check, BoundStatus, Catalog, PatternParams, RuleSet};
use strongodd::graph::generators;
use strongodd::graph::io::{parse_coloring, parse_graph_auto, to_graph6, write_coloring, write_edge_list, EdgeListFile};
use strongodd::oddrep::{solve_oddrep_with, verify_oddrep, OddRepInstance, Shrink};
use strongodd::{density, Girth, Graph};

use report::{graph_digest, ratio, Prng, Report};

#[derive(Parser)]
#[command(name = "strongodd", version, about = "Strong odd colorings, sparsity and configuration checks")]
struct Cli {
    /// Print a plain-text rendering instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edges,
    Graph6,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph: petersen | complete N | complete-bipartite M N |
    /// cycle N | path N | rook N | random N P.
    Gen {
        family: String,
        params: Vec<String>,
        #[arg(long)]
        seed: Option<u64>,
        /// Output file; the graph goes to stdout when omitted.
        #[arg(short)]
        o: Option<PathBuf>,
        /// Defaults to graph6 for `.g6` outputs and edge lists otherwise.
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Maximum average degree as an exact fraction, with a densest subset.
    Mad { graph: PathBuf },
    Girth { graph: PathBuf },
    Square {
        graph: PathBuf,
        #[arg(short)]
        o: PathBuf,
    },
    /// Cartesian product.
    Product {
        g: PathBuf,
        h: PathBuf,
        #[arg(short)]
        o: PathBuf,
    },
    Verify {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long)]
        kind: ColoringKind,
    },
    Chromatic {
        graph: PathBuf,
        #[arg(long)]
        kind: ColoringKind,
        /// Give up after this many colors.
        #[arg(long)]
        max_k: Option<u32>,
        /// Write the witness coloring here.
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// χ, χ_o, χ_so and χ(G²) with the chain and claw-free checks.
    Bounds {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SIZE_GUARD)]
        guard_override: usize,
    },
    /// Solve an odd-representative instance `{"sets": [[..], ..], "anchor": a}`.
    Oddrep {
        instance: PathBuf,
        /// Shrink sets with a seeded random choice instead of the two smallest.
        #[arg(long)]
        seed: Option<u64>,
    },
    Scan {
        graph: PathBuf,
        #[arg(long)]
        catalog: Catalog,
        #[arg(long)]
        c: Option<usize>,
        #[arg(long)]
        delta: Option<usize>,
    },
    Discharge {
        graph: PathBuf,
        #[arg(long)]
        rules: RuleSet,
    },
    CheckTheorems {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SIZE_GUARD)]
        guard_override: usize,
    },
    ExportCnf {
        graph: PathBuf,
        #[arg(long)]
        k: u32,
        #[arg(short)]
        o: PathBuf,
    },
    /// Run a suite over every `.edges` / `.g6` file in a directory.
    Corpus {
        dir: PathBuf,
        #[arg(long, value_enum)]
        suite: corpus::Suite,
        #[arg(long, default_value_t = DEFAULT_SIZE_GUARD)]
        guard_override: usize,
    },
}

pub fn load_graph(path: &Path) -> Result<(EdgeListFile, String)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let name = path.file_name().map(|s| s.to_string_lossy().to_string()).unwrap_or_default();
    let file = parse_graph_auto(&name, &text).with_context(|| format!("parsing {}", path.display()))?;
    Ok((file, text))
}

fn write_graph(g: &Graph, path: Option<&Path>, format: Option<Format>) -> Result<()> {
    let g6 = match format {
        Some(f) => matches!(f, Format::Graph6),
        None => path.is_some_and(|p| p.extension().is_some_and(|e| e == "g6")),
    };
    let text = if g6 { format!("{}\n", to_graph6(g)) } else { write_edge_list(g) };
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn param<T: std::str::FromStr>(params: &[String], i: usize, family: &str) -> Result<T> {
    let Some(s) = params.get(i) else { bail!("`{family}` needs parameter {}", i + 1) };
    s.parse().map_err(|_| anyhow::anyhow!("`{family}`: cannot parse parameter `{s}`"))
}

fn generate(family: &str, params: &[String], seed: Option<u64>) -> Result<Graph> {
    let p = |i| param::<usize>(params, i, family);
    let expected = match family {
        "petersen" => 0,
        "complete-bipartite" | "random" => 2,
        "complete" | "cycle" | "path" | "rook" => 1,
        other => bail!("unknown family `{other}`"),
    };
    if params.len() != expected {
        bail!("`{family}` takes {expected} parameter(s), got {}", params.len());
    }
    let g = match family {
        "petersen" => generators::petersen(),
        "complete" => generators::complete(p(0)?)?,
        "complete-bipartite" => generators::complete_bipartite(p(0)?, p(1)?)?,
        "cycle" => generators::cycle(p(0)?)?,
        "path" => generators::path(p(0)?)?,
        "rook" => generators::rook(p(0)?)?,
        "random" => {
            let Some(seed) = seed else { bail!("`random` needs --seed") };
            generators::random_graph(p(0)?, param::<f64>(params, 1, family)?, seed)?
        }
        _ => unreachable!(),
    };
    Ok(g)
}

fn girth_value(g: Girth) -> Value {
    match g {
        Girth::Finite(x) => json!(x),
        Girth::Infinite => Value::Null,
    }
}

fn run(command: Command) -> Result<Report> {
    Ok(match command {
        Command::Gen { family, params, seed, o, format } => {
            let g = generate(&family, &params, seed)?;
            write_graph(&g, o.as_deref(), format)?;
            let results = json!({ "family": family, "params": params, "output": o.as_ref().map(|p| p.display().to_string()) });
            let prng = if family == "random" { Prng::RandomGraph } else { Prng::None };
            let mut r = Report::new("gen", graph_digest(&g, None), results).with_seed(seed, prng);
            // the graph itself went to stdout
            r.emit = o.is_some();
            r
        }
        Command::Mad { graph } => {
            let (f, _) = load_graph(&graph)?;
            let r = density::mad::<i64>(&f.graph);
            let results = json!({
                "mad": ratio(&r.mad),
                "witness": { "subset": r.witness.subset, "density": ratio(&r.witness.density) },
            });
            Report::new("mad", graph_digest(&f.graph, Some(&graph)), results)
        }
        Command::Girth { graph } => {
            let (f, _) = load_graph(&graph)?;
            let gi = f.graph.girth();
            let results = json!({ "girth": girth_value(gi), "acyclic": gi == Girth::Infinite });
            Report::new("girth", graph_digest(&f.graph, Some(&graph)), results)
        }
        Command::Square { graph, o } => {
            let (f, _) = load_graph(&graph)?;
            let sq = f.graph.square();
            write_graph(&sq, Some(&o), None)?;
            let results = json!({ "square": graph_digest(&sq, Some(&o)) });
            Report::new("square", graph_digest(&f.graph, Some(&graph)), results)
        }
        Command::Product { g, h, o } => {
            let (fg, _) = load_graph(&g)?;
            let (fh, _) = load_graph(&h)?;
            let p = fg.graph.cartesian_product(&fh.graph);
            write_graph(&p, Some(&o), None)?;
            let inputs = json!({ "g": graph_digest(&fg.graph, Some(&g)), "h": graph_digest(&fh.graph, Some(&h)) });
            Report::new("product", inputs, json!({ "product": graph_digest(&p, Some(&o)) }))
        }
        Command::Verify { graph, coloring, kind } => {
            let (f, _) = load_graph(&graph)?;
            let text = fs::read_to_string(&coloring).with_context(|| format!("reading {}", coloring.display()))?;
            let colors = parse_coloring(&text, f.graph.n()).with_context(|| format!("parsing {}", coloring.display()))?;
            let c = Coloring::from_colors(colors)?;
            let verdict = verify(&f.graph, &c, kind)?;
            let ok = verdict.ok;
            Report::new("verify", graph_digest(&f.graph, Some(&graph)), serde_json::to_value(verdict)?).with_ok(ok)
        }
        Command::Chromatic { graph, kind, max_k, o } => {
            let (f, _) = load_graph(&graph)?;
            let opts = SolverOptions { max_k, ..SolverOptions::default() };
            let inputs = graph_digest(&f.graph, Some(&graph));
            match chromatic_with(&f.graph, kind, &opts) {
                Some(r) => {
                    if let Some(out) = &o {
                        fs::write(out, write_coloring(r.coloring.colors())).with_context(|| format!("writing {}", out.display()))?;
                    }
                    let results = json!({
                        "kind": kind,
                        "k": r.k,
                        "lower_bound": r.lower_bound,
                        "coloring": r.coloring.colors(),
                        "nodes": r.stats.nodes,
                        "output": o.as_ref().map(|p| p.display().to_string()),
                    });
                    Report::new("chromatic", inputs, results)
                }
                None => {
                    let results = json!({ "kind": kind, "k": null, "max_k": max_k, "reason": "no coloring within max_k colors" });
                    Report::new("chromatic", inputs, results).with_ok(false)
                }
            }
        }
        Command::Bounds { graph, guard_override } => {
            let (f, _) = load_graph(&graph)?;
            let r = bounds_report(&f.graph, guard_override)?;
            let ok = r.ok;
            Report::new("bounds", graph_digest(&f.graph, Some(&graph)), serde_json::to_value(r)?).with_ok(ok)
        }
        Command::Oddrep { instance, seed } => {
            let text = fs::read_to_string(&instance).with_context(|| format!("reading {}", instance.display()))?;
            let raw: OddRepInstance<i64> = serde_json::from_str(&text).with_context(|| format!("parsing {}", instance.display()))?;
            let inst = OddRepInstance::new(raw.sets, raw.anchor)?;
            let shrink = seed.map_or(Shrink::Smallest, Shrink::Seeded);
            let sol = solve_oddrep_with(&inst, shrink)?;
            let verdict = verify_oddrep(&inst, &sol.sequence)?;
            let ok = verdict.ok && sol.trace.orientation_ok;
            let sizes: Vec<usize> = inst.sets.iter().map(BTreeSet::len).collect();
            let inputs = json!({ "d": inst.d(), "set_sizes": sizes, "anchor": inst.anchor, "source": instance.display().to_string() });
            let results = json!({ "sequence": sol.sequence, "verdict": verdict, "trace": sol.trace });
            Report::new("oddrep", inputs, results).with_ok(ok).with_seed(seed, Prng::OddRepShrink)
        }
        Command::Scan { graph, catalog, c, delta } => {
            let (f, _) = load_graph(&graph)?;
            let params = PatternParams { delta, c };
            let matches = scan_catalog(&f.graph, catalog, &params)?;
            let results = json!({
                "catalog": catalog.id(),
                "params": params,
                "count": matches.len(),
                "matches": matches,
            });
            Report::new("scan", graph_digest(&f.graph, Some(&graph)), results)
        }
        Command::Discharge { graph, rules } => {
            let (f, _) = load_graph(&graph)?;
            let r = discharging_bound_check::<i64>(&f.graph, rules, rules.catalog().patterns(), &PatternParams::default(), rules.bound())?;
            let l = &r.ledger;
            let ok = r.status != BoundStatus::RedFlag && l.is_consistent();
            let transfers: Vec<Value> =
                l.transfers.iter().map(|t| json!({ "from": t.from, "to": t.to, "amount": ratio(&t.amount), "rule": t.rule })).collect();
            let results = json!({
                "rules": rules.id(),
                "status": r.status,
                "bound": ratio(&r.bound),
                "matches": r.matches,
                "ledger": {
                    "initial": l.initial.iter().map(ratio).collect::<Vec<_>>(),
                    "final": l.final_charge.iter().map(ratio).collect::<Vec<_>>(),
                    "transfers": transfers,
                    "total_initial": ratio(&l.total_initial()),
                    "total_final": ratio(&l.total_final()),
                    "consistent": l.is_consistent(),
                },
                "min_final": r.min_final.as_ref().map(|(v, c)| json!({ "vertex": v, "charge": ratio(c) })),
                "below_bound": r.below_bound,
            });
            Report::new("discharge", graph_digest(&f.graph, Some(&graph)), results).with_ok(ok)
        }
        Command::CheckTheorems { graph, guard_override } => {
            let (f, _) = load_graph(&graph)?;
            let r = theorem_check::<i64>(&f.graph, guard_override)?;
            let p = &r.premises;
            let results = json!({
                "premises": {
                    "mad": ratio(&p.mad),
                    "girth": girth_value(p.girth),
                    "max_degree": p.max_degree,
                    "c4_free": p.c4_free,
                    "proxy_product": p.proxy_product.as_ref().map(ratio),
                    "proxy": p.proxy,
                },
                "chi_so": r.chi_so,
                "verdicts": r.verdicts,
            });
            Report::new("check-theorems", graph_digest(&f.graph, Some(&graph)), results).with_ok(r.ok())
        }
        Command::ExportCnf { graph, k, o } => {
            let (f, _) = load_graph(&graph)?;
            let doc = export_cnf(&f.graph, k)?;
            fs::write(&o, doc.to_dimacs()).with_context(|| format!("writing {}", o.display()))?;
            let results = json!({
                "k": k,
                "num_vars": doc.num_vars,
                "color_vars": f.graph.n() as u64 * k as u64,
                "aux_vars": doc.aux.len(),
                "clauses": doc.clauses.len(),
                "output": o.display().to_string(),
            });
            Report::new("export-cnf", graph_digest(&f.graph, Some(&graph)), results)
        }
        Command::Corpus { dir, suite, guard_override } => corpus::run(&dir, suite, guard_override)?,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let start = Instant::now();
    match run(cli.command) {
        Ok(report) => {
            let v = report.to_json(start.elapsed());
            if !report.emit {
            } else if cli.pretty {
                print!("{}", report::pretty(&v));
            } else {
                println!("{v}");
            }
            ExitCode::from(if report.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
