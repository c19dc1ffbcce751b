use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use super::Graph;

/// Length of a shortest cycle, or `Infinite` for forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "infinity"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Infinite => s.serialize_str("infinity"),
        }
    }
}

/// Degree of a vertex together with the number of its 2-neighbors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KdProfile {
    pub degree: usize,
    pub two_neighbors: usize,
}

impl KdProfile {
    /// A `k_d`-vertex has degree `k` and at least `d` neighbors of degree 2.
    pub fn is_kd(&self, k: usize, d: usize) -> bool {
        self.degree == k && self.two_neighbors >= d
    }
}

impl Graph {
    /// Joins every pair of vertices at distance one or two.
    pub fn square(&self) -> Graph {
        let mut pairs = Vec::new();
        for u in 0..self.n() {
            for &w in self.neighbors(u) {
                if u < w {
                    pairs.push((u, w));
                }
                for &v in self.neighbors(w) {
                    if u < v {
                        pairs.push((u, v));
                    }
                }
            }
        }
        Graph::from_valid_pairs(self.n(), pairs)
    }

    /// Shortest cycle length via one BFS per root.
    ///
    /// A non-tree edge `(x, y)` met while scanning from `root` closes a closed
    /// walk of length `dist[x] + dist[y] + 1` through `root`, which contains a
    /// cycle no longer than that; the minimum over all roots is attained by a
    /// root lying on a shortest cycle.
    pub fn girth(&self) -> Girth {
        let n = self.n();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(x) = queue.pop_front() {
                if 2 * dist[x] >= best {
                    break;
                }
                for &y in self.neighbors(x) {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        best = best.min(dist[x] + dist[y] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// Cartesian product; vertex `(a, b)` is numbered `a * h.n() + b`.
    pub fn cartesian_product(&self, h: &Graph) -> Graph {
        let nh = h.n();
        let mut pairs = Vec::with_capacity(self.n() * h.m() + nh * self.m());
        for a in 0..self.n() {
            for (b, b2) in h.edges() {
                pairs.push((a * nh + b, a * nh + b2));
            }
        }
        for (a, a2) in self.edges() {
            for b in 0..nh {
                pairs.push((a * nh + b, a2 * nh + b));
            }
        }
        Graph::from_valid_pairs(self.n() * nh, pairs)
    }

    /// Returns a claw `(center, a, b, c)` if one exists.
    pub fn find_claw(&self) -> Option<[usize; 4]> {
        for v in 0..self.n() {
            let ns = self.neighbors(v);
            for (i, &a) in ns.iter().enumerate() {
                for (j, &b) in ns.iter().enumerate().skip(i + 1) {
                    if self.has_edge(a, b) {
                        continue;
                    }
                    for &c in &ns[j + 1..] {
                        if !self.has_edge(a, c) && !self.has_edge(b, c) {
                            return Some([v, a, b, c]);
                        }
                    }
                }
            }
        }
        None
    }

    /// No induced `K_{1,3}`.
    pub fn is_claw_free(&self) -> bool {
        self.find_claw().is_none()
    }

    /// A 4-cycle exists iff two distinct vertices share two neighbors.
    pub fn is_c4_free(&self) -> bool {
        let n = self.n();
        let mut seen = vec![usize::MAX; n];
        for u in 0..n {
            for &w in self.neighbors(u) {
                for &v in self.neighbors(w) {
                    if v == u {
                        continue;
                    }
                    if seen[v] == u {
                        return false;
                    }
                    seen[v] = u;
                }
            }
        }
        true
    }

    pub fn kd_profile(&self, v: usize) -> KdProfile {
        KdProfile {
            degree: self.degree(v),
            two_neighbors: self.neighbors(v).iter().filter(|&&u| self.degree(u) == 2).count(),
        }
    }

    /// Size of a largest clique, by exhaustive branching. Intended for the
    /// small graphs the exact colorers handle.
    pub fn clique_number(&self) -> usize {
        fn grow(g: &Graph, clique: usize, candidates: &[usize], best: &mut usize) {
            if clique + candidates.len() <= *best {
                return;
            }
            if candidates.is_empty() {
                *best = clique;
                return;
            }
            for (i, &v) in candidates.iter().enumerate() {
                if clique + candidates.len() - i <= *best {
                    return;
                }
                let next: Vec<usize> = candidates[i + 1..].iter().copied().filter(|&u| g.has_edge(u, v)).collect();
                grow(g, clique + 1, &next, best);
            }
        }
        let all: Vec<usize> = (0..self.n()).collect();
        let mut best = 0;
        grow(self, 0, &all, &mut best);
        best
    }

    /// Line graph; vertex `i` is the `i`-th edge of [`Graph::edges`].
    pub fn line_graph(&self) -> Graph {
        let edges: Vec<_> = self.edges().collect();
        let mut pairs = Vec::new();
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    pairs.push((i, j));
                }
            }
        }
        Graph::from_valid_pairs(edges.len(), pairs)
    }

    /// BFS distances from `source`; unreachable vertices get `usize::MAX`.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for &y in self.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }
}
