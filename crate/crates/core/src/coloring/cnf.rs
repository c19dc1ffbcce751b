//! DIMACS export of the strong odd `k`-coloring decision problem.
//!
//! Variable `x(v, c) = v * k + c` (colors `1..=k`, so the first variable is
//! 1). Clauses: at least one color per vertex, pairwise at most one,
//! properness on every edge, and for every vertex `v` of degree at least two
//! and every color `c` a prefix-XOR chain over the indicators
//! `y_j = x(u_j, c)` of the neighbors `u_1 < ... < u_d`:
//!
//! ```text
//! t_1 = y_1,  t_j <-> t_{j-1} XOR y_j  (j >= 2),  y_j -> t_d  for all j
//! ```
//!
//! Every `t_j` is a full equivalence, so auxiliaries are determined by the
//! coloring variables and models correspond one-to-one to colorings.

use std::fmt::Write as _;

use serde::Serialize;

use super::{verify_strong_odd, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub type Clause = Vec<i64>;

/// Definition of an auxiliary variable: `var <-> left XOR right`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuxVar {
    pub var: u64,
    pub vertex: usize,
    pub color: u32,
    /// Number of neighbors folded into this prefix.
    pub prefix: usize,
    pub left: u64,
    pub right: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CnfDocument {
    pub n: usize,
    pub k: u32,
    pub num_vars: u64,
    pub clauses: Vec<Clause>,
    pub aux: Vec<AuxVar>,
}

impl CnfDocument {
    pub fn color_var(&self, v: usize, c: u32) -> u64 {
        color_var(self.k, v, c)
    }

    /// The vertex and color of a coloring variable.
    pub fn var_meaning(&self, var: u64) -> Option<(usize, u32)> {
        let base = self.n as u64 * self.k as u64;
        if var == 0 || var > base {
            return None;
        }
        let i = var - 1;
        Some(((i / self.k as u64) as usize, (i % self.k as u64) as u32 + 1))
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = String::new();
        writeln!(s, "c strong odd coloring, n={} k={}", self.n, self.k).unwrap();
        writeln!(s, "c x v c = var  (vertex v has color c)").unwrap();
        for v in 0..self.n {
            for c in 1..=self.k {
                writeln!(s, "c x {v} {c} = {}", self.color_var(v, c)).unwrap();
            }
        }
        writeln!(s, "c t v c j = var <-> left xor right  (parity of the first j neighbors of v colored c)").unwrap();
        for a in &self.aux {
            writeln!(s, "c t {} {} {} = {} <-> {} xor {}", a.vertex, a.color, a.prefix, a.var, a.left, a.right).unwrap();
        }
        writeln!(s, "p cnf {} {}", self.num_vars, self.clauses.len()).unwrap();
        for cl in &self.clauses {
            for lit in cl {
                write!(s, "{lit} ").unwrap();
            }
            s.push_str("0\n");
        }
        s
    }

    /// Truth value of every variable for a coloring; index 0 is unused.
    pub fn assignment_for(&self, coloring: &Coloring) -> Result<Vec<bool>> {
        if coloring.len() != self.n {
            return Err(Error::ColoringLength { expected: self.n, got: coloring.len() });
        }
        let mut a = vec![false; self.num_vars as usize + 1];
        for v in 0..self.n {
            let c = coloring.color(v);
            if c == 0 || c > self.k {
                return Err(Error::ColorOutOfPalette { vertex: v, color: c, k: self.k });
            }
            a[self.color_var(v, c) as usize] = true;
        }
        // aux are listed in dependency order
        for x in &self.aux {
            a[x.var as usize] = a[x.left as usize] ^ a[x.right as usize];
        }
        Ok(a)
    }

    /// Decodes a model (index 0 unused) into a coloring. Fails unless every
    /// vertex has exactly one true color variable.
    pub fn decode(&self, model: &[bool]) -> Result<Coloring> {
        let mut colors = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let on: Vec<u32> = (1..=self.k).filter(|&c| model.get(self.color_var(v, c) as usize) == Some(&true)).collect();
            match on.as_slice() {
                [c] => colors.push(*c),
                _ => return Err(Error::InvalidParameter(format!("vertex {v} has {} colors in the model", on.len()))),
            }
        }
        Coloring::new(colors, self.k)
    }

    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        evaluate(&self.clauses, assignment)
    }

    /// Decides satisfiability by walking the `k^n` colorings, extending each
    /// to its unique full assignment and evaluating every clause. Returns
    /// the first satisfying coloring in lexicographic order.
    pub fn first_model_by_enumeration(&self) -> Option<Coloring> {
        self.models_by_enumeration().next()
    }

    /// All models, decoded, in lexicographic order of the colorings.
    pub fn models_by_enumeration(&self) -> impl Iterator<Item = Coloring> + '_ {
        let n = self.n;
        let k = self.k;
        let mut next = if k == 0 && n > 0 { None } else { Some(vec![1u32; n]) };
        std::iter::from_fn(move || {
            while let Some(colors) = next.take() {
                let mut succ = colors.clone();
                let mut i = 0;
                while i < n && succ[i] == k {
                    succ[i] = 1;
                    i += 1;
                }
                if i < n {
                    succ[i] += 1;
                    next = Some(succ);
                }
                let c = Coloring::new(colors, k).expect("colors in palette");
                let a = self.assignment_for(&c).expect("sized to the document");
                if self.evaluate(&a) {
                    return Some(c);
                }
            }
            None
        })
    }
}

fn color_var(k: u32, v: usize, c: u32) -> u64 {
    v as u64 * k as u64 + c as u64
}

pub fn evaluate(clauses: &[Clause], assignment: &[bool]) -> bool {
    clauses.iter().all(|cl| {
        cl.iter().any(|&lit| {
            let val = assignment.get(lit.unsigned_abs() as usize).copied().unwrap_or(false);
            if lit > 0 {
                val
            } else {
                !val
            }
        })
    })
}

/// Builds the formula. Satisfiable iff `g` has a strong odd coloring with
/// palette `1..=k`.
pub fn export_cnf(g: &Graph, k: u32) -> Result<CnfDocument> {
    if k == 0 {
        return Err(Error::InvalidParameter("palette size must be at least 1".into()));
    }
    let n = g.n();
    let x = |v: usize, c: u32| color_var(k, v, c) as i64;
    let mut clauses = Vec::new();
    for v in 0..n {
        clauses.push((1..=k).map(|c| x(v, c)).collect());
        for a in 1..=k {
            for b in a + 1..=k {
                clauses.push(vec![-x(v, a), -x(v, b)]);
            }
        }
    }
    for (u, v) in g.edges() {
        for c in 1..=k {
            clauses.push(vec![-x(u, c), -x(v, c)]);
        }
    }
    let mut next_var = n as u64 * k as u64;
    let mut aux = Vec::new();
    for v in 0..n {
        let nb = g.neighbors(v);
        if nb.len() < 2 {
            continue;
        }
        for c in 1..=k {
            let mut prev = x(nb[0], c) as u64;
            for (j, &u) in nb.iter().enumerate().skip(1) {
                next_var += 1;
                let t = next_var as i64;
                let (a, y) = (prev as i64, x(u, c));
                clauses.push(vec![-t, a, y]);
                clauses.push(vec![-t, -a, -y]);
                clauses.push(vec![t, -a, y]);
                clauses.push(vec![t, a, -y]);
                aux.push(AuxVar { var: next_var, vertex: v, color: c, prefix: j + 1, left: prev, right: x(u, c) as u64 });
                prev = next_var;
            }
            for &u in nb {
                clauses.push(vec![-x(u, c), prev as i64]);
            }
        }
    }
    Ok(CnfDocument { n, k, num_vars: next_var, clauses, aux })
}

/// A bare DIMACS formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dimacs {
    pub num_vars: u64,
    pub clauses: Vec<Clause>,
}

pub fn parse_dimacs(text: &str) -> Result<Dimacs> {
    let mut header: Option<(u64, usize)> = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let t = line.trim();
        if t.is_empty() || t.starts_with('c') {
            continue;
        }
        if t.starts_with('p') {
            let parts: Vec<&str> = t.split_whitespace().collect();
            let parsed = match parts.as_slice() {
                ["p", "cnf", v, c] => v.parse().ok().zip(c.parse().ok()),
                _ => None,
            };
            header = Some(parsed.ok_or_else(|| Error::Parse { line: line_no, message: format!("bad header `{t}`") })?);
            continue;
        }
        let Some((nv, _)) = header else {
            return Err(Error::Parse { line: line_no, message: "clause before `p cnf` header".into() });
        };
        for tok in t.split_whitespace() {
            let lit: i64 = tok.parse().map_err(|_| Error::Parse { line: line_no, message: format!("bad literal `{tok}`") })?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else if lit.unsigned_abs() > nv {
                return Err(Error::Parse { line: line_no, message: format!("literal {lit} exceeds {nv} variables") });
            } else {
                current.push(lit);
            }
        }
    }
    let Some((num_vars, count)) = header else {
        return Err(Error::Parse { line: text.lines().count().max(1), message: "missing `p cnf` header".into() });
    };
    if !current.is_empty() {
        clauses.push(current);
    }
    if clauses.len() != count {
        return Err(Error::Parse { line: text.lines().count(), message: format!("header declares {count} clauses, found {}", clauses.len()) });
    }
    Ok(Dimacs { num_vars, clauses })
}

/// True iff `coloring` extends to a model and passes the strong odd check.
pub fn model_agrees(doc: &CnfDocument, coloring: &Coloring, g: &Graph) -> bool {
    let sat = doc.assignment_for(coloring).map(|a| doc.evaluate(&a)).unwrap_or(false);
    let ok = verify_strong_odd(g, coloring).map(|v| v.ok).unwrap_or(false);
    sat == ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{solve_decision, ColoringKind};
    use crate::graph::generators::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn examples() {
        let c4 = cycle(4).unwrap();
        assert!(export_cnf(&c4, 3).unwrap().first_model_by_enumeration().is_none());
        let doc = export_cnf(&c4, 4).unwrap();
        let m = doc.first_model_by_enumeration().unwrap();
        assert!(verify_strong_odd(&c4, &m).unwrap().ok);
        assert!(export_cnf(&complete(2).unwrap(), 1).unwrap().first_model_by_enumeration().is_none());
        assert!(export_cnf(&c4, 0).is_err());
    }

    #[test]
    fn every_coloring_classified_like_the_verifier() {
        for seed in 0..10 {
            let g = random_graph(5, 0.5, seed).unwrap();
            let doc = export_cnf(&g, 3).unwrap();
            let mut colors = vec![1u32; 5];
            loop {
                let c = Coloring::new(colors.clone(), 3).unwrap();
                assert!(model_agrees(&doc, &c, &g));
                let mut i = 0;
                while i < 5 && colors[i] == 3 {
                    colors[i] = 1;
                    i += 1;
                }
                if i == 5 {
                    break;
                }
                colors[i] += 1;
            }
            assert_eq!(doc.first_model_by_enumeration().is_some(), solve_decision(&g, ColoringKind::StrongOdd, 3).is_some());
        }
    }

    #[test]
    fn non_functional_assignments_are_rejected() {
        let g = petersen();
        let doc = export_cnf(&g, 3).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..500 {
            let mut a: Vec<bool> = (0..=doc.num_vars).map(|_| rng.gen_bool(0.3)).collect();
            a[0] = false;
            if doc.decode(&a).is_err() {
                assert!(!doc.evaluate(&a));
            }
        }
    }

    #[test]
    fn dimacs_round_trip() {
        let doc = export_cnf(&cycle(5).unwrap(), 3).unwrap();
        let text = doc.to_dimacs();
        assert!(text.contains("c x 0 1 = 1"));
        let parsed = parse_dimacs(&text).unwrap();
        assert_eq!(parsed.num_vars, doc.num_vars);
        assert_eq!(parsed.clauses, doc.clauses);
        assert_eq!(doc.var_meaning(4), Some((1, 1)));
        assert!(parse_dimacs("1 2 0\n").is_err());
        assert!(parse_dimacs("p cnf 1 1\n2 0\n").is_err());
    }
}
