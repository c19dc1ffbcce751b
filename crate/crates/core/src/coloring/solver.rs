//! Complete backtracking search for colorings of a fixed palette size.
//!
//! Vertices are colored in a fixed order (descending degree, ties by index).
//! Every kind is handled by one engine: properness is enforced on the
//! constraint graph (the graph itself, or its square for square colorings)
//! and odd/strong odd kinds add a per-vertex parity predicate over the color
//! multiset of the neighborhood.
//!
//! For strong odd colorings a vertex whose neighborhood currently holds `e`
//! even non-empty color classes and still has `r` uncolored neighbors is
//! infeasible when `e > r`: each further neighbor changes the parity of one
//! class only. With `r = 0` this is the exact check once the neighborhood is
//! complete, and `r = 1, e >= 2` is the one-step lookahead.
//!
//! Color symmetry breaking lets a vertex use color `c + 1` only after color
//! `c` has appeared; all four properties are invariant under palette
//! permutations, so this keeps the search complete.

use serde::Serialize;

use super::{Coloring, ColoringKind};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverOptions {
    pub symmetry_breaking: bool,
    pub parity_pruning: bool,
    /// Largest palette tried by [`chromatic_with`]; `None` means no cap.
    pub max_k: Option<u32>,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { symmetry_breaking: true, parity_pruning: true, max_k: None }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SolverStats {
    /// Color assignments tried.
    pub nodes: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Parity {
    None,
    Odd,
    StrongOdd,
}

struct Engine<'a> {
    g: &'a Graph,
    k: usize,
    parity: Parity,
    opts: SolverOptions,
    order: Vec<usize>,
    color: Vec<usize>,
    counts: Vec<u32>,
    uncolored: Vec<usize>,
    evens: Vec<usize>,
    odds: Vec<usize>,
    nodes: u64,
}

const UNCOLORED: usize = usize::MAX;

impl<'a> Engine<'a> {
    fn new(g: &'a Graph, k: usize, parity: Parity, opts: SolverOptions) -> Self {
        let n = g.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
        Engine {
            g,
            k,
            parity,
            opts,
            order,
            color: vec![UNCOLORED; n],
            counts: vec![0; n * k],
            uncolored: g.degrees(),
            evens: vec![0; n],
            odds: vec![0; n],
            nodes: 0,
        }
    }

    fn assign(&mut self, u: usize, c: usize) {
        self.color[u] = c;
        for &w in self.g.neighbors(u) {
            let slot = &mut self.counts[w * self.k + c];
            match *slot {
                0 => self.odds[w] += 1,
                x if x % 2 == 1 => {
                    self.odds[w] -= 1;
                    self.evens[w] += 1;
                }
                _ => {
                    self.evens[w] -= 1;
                    self.odds[w] += 1;
                }
            }
            *slot += 1;
            self.uncolored[w] -= 1;
        }
    }

    fn unassign(&mut self, u: usize, c: usize) {
        self.color[u] = UNCOLORED;
        for &w in self.g.neighbors(u) {
            let slot = &mut self.counts[w * self.k + c];
            *slot -= 1;
            match *slot {
                0 => self.odds[w] -= 1,
                x if x % 2 == 1 => {
                    self.evens[w] -= 1;
                    self.odds[w] += 1;
                }
                _ => {
                    self.odds[w] -= 1;
                    self.evens[w] += 1;
                }
            }
            self.uncolored[w] += 1;
        }
    }

    /// Parity conditions of the neighbors of the vertex just colored.
    fn neighbors_feasible(&self, u: usize) -> bool {
        match self.parity {
            Parity::None => true,
            Parity::Odd => self.g.neighbors(u).iter().all(|&w| self.uncolored[w] > 0 || self.odds[w] > 0),
            Parity::StrongOdd => {
                if self.opts.parity_pruning {
                    self.g.neighbors(u).iter().all(|&w| self.evens[w] <= self.uncolored[w])
                } else {
                    self.g.neighbors(u).iter().all(|&w| self.uncolored[w] > 0 || self.evens[w] == 0)
                }
            }
        }
    }

    fn search(&mut self, idx: usize, used: usize) -> bool {
        if idx == self.order.len() {
            return true;
        }
        let u = self.order[idx];
        let limit = if self.opts.symmetry_breaking { self.k.min(used + 1) } else { self.k };
        for c in 0..limit {
            if self.counts[u * self.k + c] > 0 {
                continue;
            }
            self.nodes += 1;
            self.assign(u, c);
            if self.neighbors_feasible(u) && self.search(idx + 1, used.max(c + 1)) {
                return true;
            }
            self.unassign(u, c);
        }
        false
    }
}

fn constraint_graph(g: &Graph, kind: ColoringKind) -> (Option<Graph>, Parity) {
    match kind {
        ColoringKind::Proper => (None, Parity::None),
        ColoringKind::Odd => (None, Parity::Odd),
        ColoringKind::StrongOdd => (None, Parity::StrongOdd),
        ColoringKind::Square => (Some(g.square()), Parity::None),
    }
}

/// Decides whether `g` has a coloring of the given kind with palette
/// `1..=k`, returning a witness when it does.
pub fn solve_decision(g: &Graph, kind: ColoringKind, k: u32) -> Option<Coloring> {
    solve_decision_with(g, kind, k, &SolverOptions::default()).0
}

pub fn solve_decision_with(g: &Graph, kind: ColoringKind, k: u32, opts: &SolverOptions) -> (Option<Coloring>, SolverStats) {
    let (sq, parity) = constraint_graph(g, kind);
    let h = sq.as_ref().unwrap_or(g);
    if g.n() == 0 {
        return (Some(Coloring { colors: Vec::new(), k }), SolverStats::default());
    }
    if k == 0 {
        return (None, SolverStats::default());
    }
    let mut e = Engine::new(h, k as usize, parity, *opts);
    let found = e.search(0, 0);
    let stats = SolverStats { nodes: e.nodes };
    let coloring = found.then(|| Coloring { colors: e.color.iter().map(|&c| c as u32 + 1).collect(), k });
    (coloring, stats)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticResult {
    pub kind: ColoringKind,
    pub k: u32,
    pub coloring: Coloring,
    /// First palette size tried.
    pub lower_bound: u32,
    pub stats: SolverStats,
}

/// Clique sizes are computed exhaustively only up to this many vertices.
const CLIQUE_BOUND_MAX_N: usize = 20;

/// Minimum palette size for the given kind, with a witness.
pub fn chromatic(g: &Graph, kind: ColoringKind) -> ChromaticResult {
    chromatic_with(g, kind, &SolverOptions::default()).expect("uncapped search always succeeds")
}

/// As [`chromatic`], but returns `None` when `opts.max_k` is reached first.
pub fn chromatic_with(g: &Graph, kind: ColoringKind, opts: &SolverOptions) -> Option<ChromaticResult> {
    if g.n() == 0 {
        return Some(ChromaticResult { kind, k: 0, coloring: Coloring { colors: Vec::new(), k: 0 }, lower_bound: 0, stats: SolverStats::default() });
    }
    let lower_bound = if g.n() <= CLIQUE_BOUND_MAX_N {
        match kind {
            ColoringKind::Square => g.square().clique_number(),
            _ => g.clique_number(),
        }
    } else {
        1
    } as u32;
    let mut stats = SolverStats::default();
    // every vertex distinct is a square coloring, hence valid for all kinds
    let ceiling = opts.max_k.unwrap_or(u32::MAX).min(g.n() as u32);
    for k in lower_bound.max(1)..=ceiling {
        let (found, s) = solve_decision_with(g, kind, k, opts);
        stats.nodes += s.nodes;
        if let Some(coloring) = found {
            return Some(ChromaticResult { kind, k, coloring, lower_bound, stats });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify;
    use crate::graph::generators::*;

    /// Exhaustive search over all `k^n` assignments, checked by the verifier.
    fn enumerate(g: &Graph, kind: ColoringKind, k: u32) -> bool {
        let n = g.n();
        let mut colors = vec![1u32; n];
        loop {
            if verify(g, &Coloring::new(colors.clone(), k).unwrap(), kind).unwrap().ok {
                return true;
            }
            let mut i = 0;
            while i < n && colors[i] == k {
                colors[i] = 1;
                i += 1;
            }
            if i == n {
                return false;
            }
            colors[i] += 1;
        }
    }

    #[test]
    fn c4_strong_odd() {
        let c4 = cycle(4).unwrap();
        assert!(solve_decision(&c4, ColoringKind::StrongOdd, 3).is_none());
        let c = solve_decision(&c4, ColoringKind::StrongOdd, 4).unwrap();
        let mut distinct = c.colors().to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        assert_eq!(distinct.len(), 4);
        assert!(!enumerate(&c4, ColoringKind::StrongOdd, 3));
    }

    #[test]
    fn small_chromatic_values() {
        assert_eq!(chromatic(&complete_bipartite(3, 3).unwrap(), ColoringKind::StrongOdd).k, 2);
        assert_eq!(chromatic(&cycle(6).unwrap(), ColoringKind::StrongOdd).k, 3);
        assert_eq!(chromatic(&complete_bipartite(1, 3).unwrap(), ColoringKind::StrongOdd).k, 2);
        assert_eq!(chromatic(&cycle(5).unwrap(), ColoringKind::Square).k, 5);
        assert_eq!(chromatic(&cycle(5).unwrap(), ColoringKind::Proper).k, 3);
        assert_eq!(chromatic(&Graph::empty(3), ColoringKind::StrongOdd).k, 1);
        assert_eq!(chromatic(&Graph::empty(0), ColoringKind::Proper).k, 0);
    }

    #[test]
    fn witnesses_verify() {
        let g = random_graph(9, 0.4, 8).unwrap();
        for kind in ColoringKind::ALL {
            let r = chromatic(&g, kind);
            assert!(verify(&g, &r.coloring, kind).unwrap().ok, "{kind}");
            assert!(r.k >= r.lower_bound);
        }
    }

    #[test]
    fn agrees_with_enumeration_on_small_random_graphs() {
        for seed in 0..40 {
            let g = random_graph(6, 0.45, seed).unwrap();
            for kind in ColoringKind::ALL {
                for k in 1..=4 {
                    let found = solve_decision(&g, kind, k);
                    assert_eq!(found.is_some(), enumerate(&g, kind, k), "seed {seed} {kind} k={k}");
                }
            }
        }
    }

    #[test]
    fn options_do_not_change_answers() {
        let plain = SolverOptions { symmetry_breaking: false, parity_pruning: false, max_k: None };
        for seed in 0..15 {
            let g = random_graph(7, 0.4, 100 + seed).unwrap();
            for kind in ColoringKind::ALL {
                assert_eq!(chromatic(&g, kind).k, chromatic_with(&g, kind, &plain).unwrap().k);
            }
        }
    }

    #[test]
    fn max_k_caps_search() {
        let capped = SolverOptions { max_k: Some(5), ..SolverOptions::default() };
        assert!(chromatic_with(&petersen(), ColoringKind::StrongOdd, &capped).is_none());
    }
}
