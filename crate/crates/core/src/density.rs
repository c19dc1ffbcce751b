//! Maximum average degree, computed exactly.
//!
//! `mad(G)` is the maximum of `2|E(H)|/|V(H)|` over non-empty subgraphs `H`.
//! Restricting to induced subgraphs loses nothing: the induced subgraph on
//! `V(H)` has the same vertex count and at least as many edges as `H`.
//!
//! The maximum density `|E(S)|/|S|` is found by a sequence of exact
//! threshold tests. For a candidate `p/q`, the quantity
//! `max_S q|E(S)| - p|S|` is a maximum-weight closure problem (choosing an
//! edge forces its endpoints) and is solved by an `s-t` minimum cut with
//! integer capacities: source to each edge node with capacity `q`, edge node
//! to its endpoints with infinite capacity, each vertex to the sink with
//! capacity `p`. A positive value yields a set `S` of strictly larger
//! density, which becomes the next candidate. Every candidate is a ratio
//! `e/v` with `1 <= v <= n`, `0 <= e <= |E|`, and candidates strictly
//! increase, so the search terminates at the optimum.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Girth, Graph};
use crate::scalar::{frac, int, ExactInt, Ratio};

/// A non-empty vertex set together with `|E(G[S])| / |S|` (half the
/// average degree of the induced subgraph).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityWitness<T: ExactInt> {
    pub subset: Vec<usize>,
    pub density: Ratio<T>,
}

impl<T: ExactInt> DensityWitness<T> {
    fn of(g: &Graph, subset: Vec<usize>) -> Self {
        let density = frac(g.induced_edge_count(&subset) as i64, subset.len() as i64);
        DensityWitness { subset, density }
    }

    /// Recomputes the density of the subset from the graph.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        !self.subset.is_empty()
            && self.subset.iter().all(|&v| v < g.n())
            && frac::<T>(g.induced_edge_count(&self.subset) as i64, self.subset.len() as i64) == self.density
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MadResult<T: ExactInt> {
    pub mad: Ratio<T>,
    pub witness: DensityWitness<T>,
}

const INF: i64 = i64::MAX / 4;

/// Dinic's algorithm on an adjacency-list residual network.
struct FlowNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork { head: vec![Vec::new(); nodes], to: Vec::new(), cap: Vec::new() }
    }

    fn add_edge(&mut self, u: usize, v: usize, c: i64) {
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(c);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
    }

    fn levels(&self, s: usize) -> Vec<usize> {
        let mut level = vec![usize::MAX; self.head.len()];
        level[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && level[v] == usize::MAX {
                    level[v] = level[u] + 1;
                    q.push_back(v);
                }
            }
        }
        level
    }

    fn augment(&mut self, u: usize, t: usize, pushed: i64, level: &[usize], it: &mut [usize]) -> i64 {
        if u == t {
            return pushed;
        }
        while it[u] < self.head[u].len() {
            let e = self.head[u][it[u]];
            let v = self.to[e];
            if self.cap[e] > 0 && level[v] == level[u] + 1 {
                let got = self.augment(v, t, pushed.min(self.cap[e]), level, it);
                if got > 0 {
                    self.cap[e] -= got;
                    self.cap[e ^ 1] += got;
                    return got;
                }
            }
            it[u] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        loop {
            let level = self.levels(s);
            if level[t] == usize::MAX {
                return flow;
            }
            let mut it = vec![0; self.head.len()];
            loop {
                let f = self.augment(s, t, INF, &level, &mut it);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
    }

    /// Nodes reachable from `s` in the residual network (the minimal source
    /// side of a minimum cut).
    fn source_side(&self, s: usize) -> Vec<bool> {
        let level = self.levels(s);
        level.iter().map(|&l| l != usize::MAX).collect()
    }
}

/// Solves `max_S q|E(S)| - p|S|` exactly. Returns the optimum value and the
/// minimal optimal vertex set.
fn best_closure(g: &Graph, p: i64, q: i64) -> (i64, Vec<usize>) {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();
    let (s, t) = (m + n, m + n + 1);
    let mut net = FlowNetwork::new(m + n + 2);
    for (i, &(u, v)) in edges.iter().enumerate() {
        net.add_edge(s, i, q);
        net.add_edge(i, m + u, INF);
        net.add_edge(i, m + v, INF);
    }
    for v in 0..n {
        net.add_edge(m + v, t, p);
    }
    let cut = net.max_flow(s, t);
    let side = net.source_side(s);
    let subset: Vec<usize> = (0..n).filter(|&v| side[m + v]).collect();
    (q * m as i64 - cut, subset)
}

/// Exact maximum average degree with a witness subset.
///
/// For an edgeless graph the result is `0` with the single vertex `{0}`
/// as witness (or an empty witness when `n = 0`).
pub fn mad<T: ExactInt>(g: &Graph) -> MadResult<T> {
    if g.m() == 0 {
        let subset = if g.n() > 0 { vec![0] } else { Vec::new() };
        return MadResult { mad: int(0), witness: DensityWitness { subset, density: int(0) } };
    }
    let mut subset: Vec<usize> = (0..g.n()).collect();
    let (mut e, mut v) = (g.m() as i64, g.n() as i64);
    loop {
        let (value, better) = best_closure(g, e, v);
        if value <= 0 {
            break;
        }
        debug_assert!(!better.is_empty());
        e = g.induced_edge_count(&better) as i64;
        v = better.len() as i64;
        subset = better;
    }
    let witness = DensityWitness::of(g, subset);
    MadResult { mad: witness.density.clone() * int::<T>(2), witness }
}

/// Largest `n` accepted by [`mad_bruteforce`].
pub const BRUTEFORCE_MAX_N: usize = 20;

/// Exact maximum average degree by enumerating every non-empty vertex
/// subset. Independent of the flow-based route.
pub fn mad_bruteforce<T: ExactInt>(g: &Graph) -> Result<Ratio<T>> {
    let n = g.n();
    if n > BRUTEFORCE_MAX_N {
        return Err(Error::SizeGuard { what: "mad brute force vertex count".into(), limit: BRUTEFORCE_MAX_N, actual: n });
    }
    let nbr: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |a, &u| a | 1 << u)).collect();
    let (mut best_e, mut best_v) = (0i64, 1i64);
    for mask in 1u32..(1u32 << n) {
        let mut twice = 0;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            twice += (nbr[v] & mask).count_ones() as i64;
        }
        let size = mask.count_ones() as i64;
        // twice / size > best_e / best_v, where twice already counts 2|E|
        if twice * best_v > best_e * size {
            best_e = twice;
            best_v = size;
        }
    }
    Ok(frac(best_e, best_v))
}

/// Outcome of a premise test that may not apply (for example a girth bound
/// on a forest).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Premise {
    Holds,
    Fails,
    NotApplicable,
}

impl Premise {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Premise::Holds
        } else {
            Premise::Fails
        }
    }

    pub fn holds(self) -> bool {
        self == Premise::Holds
    }
}

/// The sparseness premises of the three upper bounds and the planar
/// mad/girth proxy `(mad - 2)(girth - 2) < 4`, evaluated exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PremiseReport<T: ExactInt> {
    pub mad: Ratio<T>,
    pub girth: Girth,
    pub max_degree: usize,
    pub c4_free: bool,
    /// `(mad - 2)(girth - 2)` when the girth is finite.
    pub proxy_product: Option<Ratio<T>>,
    /// `(mad - 2)(girth - 2) < 4`; not applicable for forests.
    pub proxy: Premise,
    /// `mad <= 20/7`.
    pub mad_at_most_20_7: Premise,
    /// `Δ >= 4` and `mad <= 30/11`.
    pub high_degree_mad_at_most_30_11: Premise,
    /// `C4`-free, `Δ <= 3` and `mad <= 30/11`.
    pub subcubic_c4_free_mad_at_most_30_11: Premise,
}

pub fn corollary_premise<T: ExactInt>(g: &Graph) -> PremiseReport<T> {
    let mad = mad::<T>(g).mad;
    let girth = g.girth();
    let max_degree = g.max_degree();
    let c4_free = g.is_c4_free();
    let proxy_product = girth.finite().map(|gi| (mad.clone() - int(2)) * int::<T>(gi as i64 - 2));
    let proxy = match &proxy_product {
        Some(p) => Premise::from_bool(*p < int(4)),
        None => Premise::NotApplicable,
    };
    let t20_7 = frac::<T>(20, 7);
    let t30_11 = frac::<T>(30, 11);
    PremiseReport {
        mad_at_most_20_7: Premise::from_bool(mad <= t20_7),
        high_degree_mad_at_most_30_11: Premise::from_bool(max_degree >= 4 && mad <= t30_11),
        subcubic_c4_free_mad_at_most_30_11: Premise::from_bool(c4_free && max_degree <= 3 && mad <= t30_11),
        mad,
        girth,
        max_degree,
        c4_free,
        proxy_product,
        proxy,
    }
}
