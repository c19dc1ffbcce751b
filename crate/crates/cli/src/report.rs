//! The JSON envelope shared by every subcommand, and its `--pretty` text form.

use std::path::Path;
use std::time::Duration;

use serde_json::{json, Map, Value};
use strongodd::graph::generators::RANDOM_GRAPH_PRNG;
use strongodd::scalar::ratio_string;
use strongodd::{ExactInt, Graph, Ratio};

pub fn ratio<T: ExactInt>(r: &Ratio<T>) -> Value {
    Value::String(ratio_string(r))
}

pub fn graph_digest(g: &Graph, source: Option<&Path>) -> Value {
    json!({
        "n": g.n(),
        "m": g.m(),
        "degree_histogram": g.degree_histogram(),
        "source": source.map(|p| p.display().to_string()),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prng {
    None,
    RandomGraph,
    OddRepShrink,
}

pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub results: Value,
    pub seed: Option<u64>,
    pub prng: Prng,
    /// False when the subcommand's check failed (exit code 1).
    pub ok: bool,
    pub emit: bool,
}

impl Report {
    pub fn new(command: &'static str, inputs: Value, results: Value) -> Self {
        Report { command, inputs, results, seed: None, prng: Prng::None, ok: true, emit: true }
    }

    pub fn with_ok(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }

    pub fn with_seed(mut self, seed: Option<u64>, prng: Prng) -> Self {
        self.seed = seed;
        self.prng = if seed.is_some() { prng } else { Prng::None };
        self
    }

    pub fn to_json(&self, elapsed: Duration) -> Value {
        let prng = match self.prng {
            Prng::None => Value::Null,
            Prng::RandomGraph => json!(RANDOM_GRAPH_PRNG),
            Prng::OddRepShrink => json!("chacha8(seed_from_u64)/choose_multiple"),
        };
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "meta": {
                "version": env!("CARGO_PKG_VERSION"),
                "seed": self.seed,
                "prng": prng,
                "timing": { "elapsed_us": elapsed.as_micros() as u64 },
            },
        })
    }
}

/// Flattens a JSON value into `path = value` lines. Short arrays of scalars
/// stay on one line.
pub fn pretty(v: &Value) -> String {
    let mut out = String::new();
    walk(v, String::new(), &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::String(s) => Some(s.clone()),
        Value::Bool(_) | Value::Number(_) => Some(v.to_string()),
        _ => None,
    }
}

fn walk(v: &Value, path: String, out: &mut String) {
    let key = |k: &str| if path.is_empty() { k.to_string() } else { format!("{path}.{k}") };
    match v {
        Value::Object(map) => walk_map(map, &key, out),
        Value::Array(items) => {
            let flat: Option<Vec<String>> = items.iter().map(scalar).collect();
            match flat {
                Some(parts) if parts.len() <= 24 => out.push_str(&format!("{path:<40} [{}]\n", parts.join(", "))),
                _ => {
                    for (i, item) in items.iter().enumerate() {
                        walk(item, format!("{path}[{i}]"), out);
                    }
                }
            }
        }
        _ => out.push_str(&format!("{path:<40} {}\n", scalar(v).unwrap_or_default())),
    }
}

fn walk_map(map: &Map<String, Value>, key: &dyn Fn(&str) -> String, out: &mut String) {
    for (k, v) in map {
        walk(v, key(k), out);
    }
}
