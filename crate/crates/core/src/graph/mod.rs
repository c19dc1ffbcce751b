//! Simple undirected graphs on dense vertex indices `0..n`.

mod canonical;
pub mod generators;
pub mod io;
mod multigraph;
mod ops;

use std::fmt;

use crate::error::{Error, Result};

pub use canonical::{all_graphs, canonical_code, canonical_form};
pub use multigraph::{Multigraph, Orientation};
pub use ops::{Girth, KdProfile};

/// Immutable simple undirected graph.
///
/// Neighbor lists are kept sorted; a dense bit matrix answers adjacency
/// queries in constant time.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph { n, m: 0, adj: vec![Vec::new(); n], words, bits: vec![0; n * words] }
    }

    /// Builds a graph from vertex pairs. Duplicate pairs (in either
    /// orientation) collapse to a single edge.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in pairs {
            if u >= n || v >= n {
                let vertex = if u >= n { u } else { v };
                return Err(Error::VertexOutOfRange { n, vertex, u, v });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.insert(u, v);
        }
        g.finish();
        Ok(g)
    }

    /// Infallible constructor for internal generators whose pairs are valid
    /// by construction.
    pub(crate) fn from_valid_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Graph::empty(n);
        for (u, v) in pairs {
            debug_assert!(u < n && v < n && u != v);
            g.insert(u, v);
        }
        g.finish();
        g
    }

    fn insert(&mut self, u: usize, v: usize) {
        if self.has_edge(u, v) {
            return;
        }
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.m += 1;
    }

    fn finish(&mut self) {
        for list in &mut self.adj {
            list.sort_unstable();
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// `histogram[d]` is the number of vertices of degree `d`.
    pub fn degree_histogram(&self) -> Vec<usize> {
        let mut h = vec![0; self.max_degree() + 1];
        for list in &self.adj {
            h[list.len()] += 1;
        }
        h
    }

    /// Number of edges of the subgraph induced by `subset` (which must not
    /// contain duplicates).
    pub fn induced_edge_count(&self, subset: &[usize]) -> usize {
        let mut inside = vec![false; self.n];
        for &v in subset {
            inside[v] = true;
        }
        subset
            .iter()
            .map(|&v| self.adj[v].iter().filter(|&&u| inside[u] && u > v).count())
            .sum()
    }

    /// Subgraph induced by `subset`, relabelled to `0..subset.len()` in the
    /// order given.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in subset.iter().enumerate() {
            index[v] = i;
        }
        let pairs = subset.iter().enumerate().flat_map(|(i, &v)| {
            let index = &index;
            self.adj[v].iter().filter_map(move |&u| (index[u] != usize::MAX && index[u] > i).then_some((i, index[u])))
        });
        Graph::from_valid_pairs(subset.len(), pairs.collect::<Vec<_>>())
    }

    /// Adds an edge, returning a new graph.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut pairs: Vec<_> = self.edges().collect();
        pairs.push((u, v));
        Graph::from_edge_list(self.n, &pairs)
    }

    /// Graph with the vertices renamed by `perm` (vertex `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        Graph::from_valid_pairs(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])).collect::<Vec<_>>())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
