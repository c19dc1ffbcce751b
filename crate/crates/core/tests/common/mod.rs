//! Corpora and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use strongodd::graph::generators::*;
use strongodd::Graph;

pub fn named_fixtures() -> Vec<(String, Graph)> {
    let k2 = complete(2).unwrap();
    let k3 = complete(3).unwrap();
    let mut out: Vec<(String, Graph)> = vec![
        ("petersen".into(), petersen()),
        ("k4".into(), complete(4).unwrap()),
        ("k5".into(), complete(5).unwrap()),
        ("k2,3".into(), complete_bipartite(2, 3).unwrap()),
        ("k3,3".into(), complete_bipartite(3, 3).unwrap()),
        ("k1,4".into(), complete_bipartite(1, 4).unwrap()),
        ("p3".into(), path(3).unwrap()),
        ("p4".into(), path(4).unwrap()),
        ("k2xk2".into(), k2.cartesian_product(&k2)),
        ("k3xk3".into(), k3.cartesian_product(&k3)),
        ("prism".into(), k3.cartesian_product(&k2)),
        ("cube".into(), cycle(4).unwrap().cartesian_product(&k2)),
        ("subdivided-k4".into(), subdivide(&complete(4).unwrap())),
        ("twenty-sevenths".into(), twenty_sevenths_fixture()),
        ("z".into(), z_fixture()),
    ];
    for n in 3..=9 {
        out.push((format!("c{n}"), cycle(n).unwrap()));
    }
    out
}

/// 3-vertex 0 with 2-neighbor 1 and two 3-neighbors without 2-neighbors.
pub fn twenty_sevenths_fixture() -> Graph {
    Graph::from_edge_list(6, &[(0, 1), (1, 2), (0, 3), (0, 4), (3, 4), (3, 5), (4, 5), (5, 2)]).unwrap()
}

/// Three `3_1`-vertices 0-1-2 in a path; only 1 has two `3_1`-neighbors.
pub fn z_fixture() -> Graph {
    Graph::from_edge_list(9, &[(0, 1), (1, 2), (0, 3), (1, 4), (2, 5), (3, 6), (4, 7), (5, 8), (0, 6), (2, 8)]).unwrap()
}

/// Subdivides the listed edges of `g` once each.
pub fn subdivide_edges(g: &Graph, which: &[(usize, usize)]) -> Graph {
    let mut n = g.n();
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        if which.contains(&(u, v)) {
            edges.push((u, n));
            edges.push((n, v));
            n += 1;
        } else {
            edges.push((u, v));
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Petersen graph with every subset of a fixed set of pairwise far edges
/// subdivided, plus the cube and prism variants.
pub fn subdivided_cubic_family() -> Vec<Graph> {
    let mut out = Vec::new();
    let bases = [petersen(), cycle(4).unwrap().cartesian_product(&complete(2).unwrap()), complete_bipartite(3, 3).unwrap()];
    for base in bases {
        let edges: Vec<(usize, usize)> = base.edges().collect();
        for mask in 0u32..(1 << 5) {
            let which: Vec<(usize, usize)> = (0..5).filter(|i| mask >> i & 1 == 1).map(|i| edges[(i * 3) % edges.len()]).collect();
            out.push(subdivide_edges(&base, &which));
        }
    }
    out
}

pub fn random_corpus() -> Vec<Graph> {
    let ps = [0.2, 0.3, 0.4, 0.5, 0.6];
    (0..200u64).map(|i| random_graph(3 + (i as usize % 8), ps[(i / 8) as usize % ps.len()], 1000 + i).unwrap()).collect()
}

pub fn sparse_corpus() -> Vec<Graph> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for seed in 0..1500u64 {
        let n = 5 + (seed as usize % 8);
        let extra = (seed as usize / 8) % 4;
        let g = random_sparse(n, extra, seed).unwrap();
        let s = subdivide(&g);
        let b = random_bounded_degree(n + 2, 3, 0.35, seed).unwrap();
        for h in [g, s, b] {
            if h.n() <= 16 && seen.insert((h.n(), h.edges().collect::<Vec<_>>())) {
                out.push(h);
            }
        }
    }
    out
}

/// Every graph used by the corpus-wide properties.
pub fn full_corpus() -> Vec<Graph> {
    let mut all: Vec<Graph> = named_fixtures().into_iter().map(|(_, g)| g).collect();
    all.extend(random_corpus());
    all.extend(sparse_corpus());
    all.extend(subdivided_cubic_family());
    all
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() == 0 || g.distances_from(0).iter().all(|&d| d != usize::MAX)
}

/// Adjacency bitmasks, independent of the crate's square routine.
pub struct Bits {
    pub n: usize,
    pub adj: Vec<u32>,
    pub near: Vec<u32>,
}

impl Bits {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut adj = vec![0u32; n];
        for (u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let near = (0..n)
            .map(|v| {
                let mut m = adj[v];
                for u in 0..n {
                    if adj[v] >> u & 1 == 1 {
                        m |= adj[u];
                    }
                }
                m & !(1 << v)
            })
            .collect();
        Bits { n, adj, near }
    }
}

/// Smallest largest-color over all colorings with colors `1..=4` that are
/// proper / odd / strong odd / square, in that order; `u32::MAX` if none.
/// Walks every assignment, skipping only subtrees already improper (every
/// kind requires properness).
pub fn oracle_min_colors(g: &Graph) -> [u32; 4] {
    let b = Bits::new(g);
    let mut best = [u32::MAX; 4];
    let mut col = vec![0u32; b.n];
    fn rec(b: &Bits, v: usize, col: &mut Vec<u32>, best: &mut [u32; 4]) {
        if v == b.n {
            let top = col.iter().copied().max().unwrap_or(0);
            let mut odd = true;
            let mut strong = true;
            let mut square = true;
            for x in 0..b.n {
                let mut counts = [0u32; 5];
                for u in 0..b.n {
                    if b.adj[x] >> u & 1 == 1 {
                        counts[col[u] as usize] += 1;
                    }
                    if b.near[x] >> u & 1 == 1 && col[u] == col[x] {
                        square = false;
                    }
                }
                if b.adj[x] != 0 && counts.iter().all(|c| c % 2 == 0) {
                    odd = false;
                }
                if counts.iter().any(|&c| c > 0 && c % 2 == 0) {
                    strong = false;
                }
            }
            for (i, ok) in [true, odd, strong, square].into_iter().enumerate() {
                if ok {
                    best[i] = best[i].min(top);
                }
            }
            return;
        }
        for c in 1..=4 {
            if (0..v).any(|u| b.adj[v] >> u & 1 == 1 && col[u] == c) {
                continue;
            }
            col[v] = c;
            rec(b, v + 1, col, best);
        }
        col[v] = 0;
    }
    if b.n == 0 {
        return [0; 4];
    }
    rec(&b, 0, &mut col, &mut best);
    best
}
