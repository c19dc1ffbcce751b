use std::collections::BTreeMap;

use super::{Coloring, ColoringKind, Verdict, Violation};
use crate::error::{Error, Result};
use crate::graph::Graph;

fn check_len(g: &Graph, c: &Coloring) -> Result<()> {
    if c.len() != g.n() {
        return Err(Error::ColoringLength { expected: g.n(), got: c.len() });
    }
    Ok(())
}

fn neighbor_counts(g: &Graph, c: &Coloring, v: usize) -> BTreeMap<u32, usize> {
    let mut counts = BTreeMap::new();
    for &u in g.neighbors(v) {
        *counts.entry(c.color(u)).or_insert(0) += 1;
    }
    counts
}

fn proper_violations(g: &Graph, c: &Coloring) -> Vec<Violation> {
    g.edges()
        .filter(|&(u, v)| c.color(u) == c.color(v))
        .map(|(u, v)| {
            let color = c.color(u);
            let count = g.neighbors(u).iter().filter(|&&w| c.color(w) == color).count();
            Violation { vertex: u, color, count, neighbor: Some(v) }
        })
        .collect()
}

pub fn verify_proper(g: &Graph, c: &Coloring) -> Result<Verdict> {
    check_len(g, c)?;
    Ok(Verdict::from_violations(ColoringKind::Proper, proper_violations(g, c)))
}

/// Proper, and every non-isolated vertex has some color of odd multiplicity
/// in its neighborhood. A failing vertex reports each of its (even) color
/// classes.
pub fn verify_odd(g: &Graph, c: &Coloring) -> Result<Verdict> {
    check_len(g, c)?;
    let mut violations = proper_violations(g, c);
    for v in 0..g.n() {
        if g.degree(v) == 0 {
            continue;
        }
        let counts = neighbor_counts(g, c, v);
        if counts.values().all(|&k| k % 2 == 0) {
            violations.extend(counts.into_iter().map(|(color, count)| Violation { vertex: v, color, count, neighbor: None }));
        }
    }
    Ok(Verdict::from_violations(ColoringKind::Odd, violations))
}

/// Proper, and every color present around a vertex occurs an odd number of
/// times there. Each even class is reported.
pub fn verify_strong_odd(g: &Graph, c: &Coloring) -> Result<Verdict> {
    check_len(g, c)?;
    let mut violations = proper_violations(g, c);
    for v in 0..g.n() {
        for (color, count) in neighbor_counts(g, c, v) {
            if count % 2 == 0 {
                violations.push(Violation { vertex: v, color, count, neighbor: None });
            }
        }
    }
    Ok(Verdict::from_violations(ColoringKind::StrongOdd, violations))
}

/// Proper coloring of the square.
pub fn verify_square(g: &Graph, c: &Coloring) -> Result<Verdict> {
    check_len(g, c)?;
    Ok(Verdict::from_violations(ColoringKind::Square, proper_violations(&g.square(), c)))
}

pub fn verify(g: &Graph, c: &Coloring, kind: ColoringKind) -> Result<Verdict> {
    match kind {
        ColoringKind::Proper => verify_proper(g, c),
        ColoringKind::Odd => verify_odd(g, c),
        ColoringKind::StrongOdd => verify_strong_odd(g, c),
        ColoringKind::Square => verify_square(g, c),
    }
}

impl Violation {
    /// Re-checks this violation against the graph and coloring from scratch.
    pub fn recheck(&self, g: &Graph, c: &Coloring, kind: ColoringKind) -> bool {
        let here = if kind == ColoringKind::Square { g.square() } else { g.clone() };
        let count = here.neighbors(self.vertex).iter().filter(|&&u| c.color(u) == self.color).count();
        if count != self.count {
            return false;
        }
        match self.neighbor {
            Some(w) => here.has_edge(self.vertex, w) && c.color(self.vertex) == self.color && c.color(w) == self.color,
            None => match kind {
                ColoringKind::StrongOdd => count >= 2 && count % 2 == 0,
                ColoringKind::Odd => {
                    count >= 2
                        && count % 2 == 0
                        && neighbor_counts(g, c, self.vertex).values().all(|&k| k % 2 == 0)
                }
                _ => false,
            },
        }
    }
}
