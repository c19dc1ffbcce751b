//! Canonical labelling for small graphs, used to enumerate isomorphism
//! classes for exhaustive sweeps.
//!
//! Vertices are first split by colour refinement; the canonical code is the
//! lexicographically largest upper-triangle bit string over all orderings that
//! respect the refined cell order, found by branch and bound.

use std::collections::{BTreeMap, HashSet};

use super::Graph;

/// Largest `n` whose upper triangle fits a `u64` code.
pub const CANONICAL_MAX_N: usize = 11;

fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color: Vec<usize> = g.degrees();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut ns: Vec<usize> = g.neighbors(v).iter().map(|&u| color[u]).collect();
                ns.sort_unstable();
                (color[v], ns)
            })
            .collect();
        let ranks: BTreeMap<&(usize, Vec<usize>), usize> =
            sigs.iter().collect::<std::collections::BTreeSet<_>>().into_iter().enumerate().map(|(i, s)| (s, i)).collect();
        let next: Vec<usize> = sigs.iter().map(|s| ranks[s]).collect();
        let classes = |c: &[usize]| c.iter().collect::<HashSet<_>>().len();
        if classes(&next) == classes(&color) {
            return next;
        }
        color = next;
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    cell_of_position: Vec<usize>,
    cells: Vec<Vec<usize>>,
    order: Vec<usize>,
    used: Vec<bool>,
    best: Option<(u64, Vec<usize>)>,
}

impl Search<'_> {
    /// Bits contributed by the vertex placed at `pos`: adjacency to the
    /// vertices at positions `0..pos`, most significant first.
    fn row(&self, pos: usize, v: usize) -> u64 {
        self.order[..pos].iter().fold(0, |acc, &u| (acc << 1) | self.g.has_edge(u, v) as u64)
    }

    fn go(&mut self, pos: usize, code: u64, bits: u32) {
        if pos == self.n {
            if self.best.as_ref().is_none_or(|(b, _)| code > *b) {
                self.best = Some((code, self.order.clone()));
            }
            return;
        }
        let cell = self.cell_of_position[pos];
        for i in 0..self.cells[cell].len() {
            let v = self.cells[cell][i];
            if self.used[v] {
                continue;
            }
            let row = self.row(pos, v);
            let code2 = (code << pos) | row;
            let bits2 = bits + pos as u32;
            if let Some((b, _)) = &self.best {
                let total = (self.n * (self.n - 1) / 2) as u32;
                let prefix = if total == 0 { 0 } else { b >> (total - bits2) };
                if code2 < prefix {
                    continue;
                }
            }
            self.used[v] = true;
            self.order[pos] = v;
            self.go(pos + 1, code2, bits2);
            self.used[v] = false;
        }
    }
}

/// Canonical code and the ordering realising it (`order[i]` is the vertex
/// placed at position `i`). Panics if `g.n() > CANONICAL_MAX_N`.
pub fn canonical_form(g: &Graph) -> (u64, Vec<usize>) {
    let n = g.n();
    assert!(n <= CANONICAL_MAX_N, "canonical labelling supports at most {CANONICAL_MAX_N} vertices");
    let color = refine(g);
    let ncells = color.iter().max().map_or(0, |&c| c + 1);
    let mut cells = vec![Vec::new(); ncells];
    for v in 0..n {
        cells[color[v]].push(v);
    }
    let cell_of_position: Vec<usize> = cells.iter().enumerate().flat_map(|(i, c)| std::iter::repeat_n(i, c.len())).collect();
    let mut s = Search { g, n, cell_of_position, cells, order: vec![0; n], used: vec![false; n], best: None };
    s.go(0, 0, 0);
    s.best.unwrap_or((0, Vec::new()))
}

pub fn canonical_code(g: &Graph) -> u64 {
    canonical_form(g).0
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - k) & 1 == 1 {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_valid_pairs(n, pairs)
}

/// One representative of every isomorphism class of graphs on exactly `n`
/// vertices, in canonical labelling, sorted by code.
///
/// Classes on `n` vertices are obtained by adding a vertex with every
/// possible neighbourhood to each class on `n - 1` vertices; every graph
/// arises this way by deleting its last vertex.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= CANONICAL_MAX_N.min(9), "exhaustive enumeration is limited to n <= 9");
    let mut level: Vec<u64> = vec![0];
    for k in 1..=n {
        let prev: Vec<Graph> = level.iter().map(|&c| graph_from_code(k - 1, c)).collect();
        let mut seen = HashSet::new();
        for h in &prev {
            let base: Vec<(usize, usize)> = h.edges().collect();
            for mask in 0u32..(1 << (k - 1)) {
                let mut pairs = base.clone();
                pairs.extend((0..k - 1).filter(|&u| mask >> u & 1 == 1).map(|u| (u, k - 1)));
                seen.insert(canonical_code(&Graph::from_valid_pairs(k, pairs)));
            }
        }
        level = seen.into_iter().collect();
        level.sort_unstable();
    }
    level.into_iter().map(|c| graph_from_code(n, c)).collect()
}
