//! Standard graph families.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

/// Identifier of the random stream used by [`random_graph`], recorded in
/// reports so that fixtures can be regenerated elsewhere.
pub const RANDOM_GRAPH_PRNG: &str = "chacha8(seed_from_u64)/gen_bool/pairs-lexicographic";

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

/// The Petersen graph: outer 5-cycle `0..5`, spokes `i -- i+5`, inner
/// pentagram on `5..10`.
pub fn petersen() -> Graph {
    let mut pairs = Vec::with_capacity(15);
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
        pairs.push((i, i + 5));
        pairs.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_valid_pairs(10, pairs)
}

pub fn complete(n: usize) -> Result<Graph> {
    require(n >= 1, || format!("complete graph needs n >= 1, got {n}"))?;
    Ok(Graph::from_valid_pairs(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))))
}

/// `K_{m,n}` with the first side on `0..m`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    require(m >= 1 && n >= 1, || format!("complete bipartite graph needs m, n >= 1, got ({m}, {n})"))?;
    Ok(Graph::from_valid_pairs(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v)))))
}

/// Complete multipartite graph with the given part sizes, parts numbered
/// consecutively.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    require(!parts.is_empty() && parts.iter().all(|&p| p >= 1), || {
        format!("complete multipartite graph needs non-empty parts, got {parts:?}")
    })?;
    let mut part_of = Vec::new();
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, p));
    }
    let n = part_of.len();
    let part_of = &part_of;
    Ok(Graph::from_valid_pairs(
        n,
        (0..n).flat_map(|u| (u + 1..n).filter(move |&v| part_of[u] != part_of[v]).map(move |v| (u, v))),
    ))
}

pub fn cycle(n: usize) -> Result<Graph> {
    require(n >= 3, || format!("cycle needs n >= 3, got {n}"))?;
    Ok(Graph::from_valid_pairs(n, (0..n).map(|i| (i, (i + 1) % n))))
}

pub fn path(n: usize) -> Result<Graph> {
    require(n >= 1, || format!("path needs n >= 1, got {n}"))?;
    Ok(Graph::from_valid_pairs(n, (1..n).map(|i| (i - 1, i))))
}

/// `K_n □ K_n`, the rook's graph.
pub fn rook(n: usize) -> Result<Graph> {
    let k = complete(n)?;
    Ok(k.cartesian_product(&k))
}

/// Every edge replaced by a path of length two; the new vertex of the
/// `i`-th edge is `g.n() + i`.
pub fn subdivide(g: &Graph) -> Graph {
    let n = g.n();
    let pairs: Vec<_> = g.edges().enumerate().flat_map(|(i, (u, v))| [(u, n + i), (n + i, v)]).collect();
    Graph::from_valid_pairs(n + g.m(), pairs)
}

/// Erdős–Rényi `G(n, p)`: each pair `(u, v)`, `u < v`, visited in
/// lexicographic order, is kept when `gen_bool(p)` on a ChaCha8 stream seeded
/// with `seed` returns true.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    require(n >= 1, || format!("random graph needs n >= 1, got {n}"))?;
    require((0.0..=1.0).contains(&p), || format!("edge probability must lie in [0, 1], got {p}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Ok(Graph::from_valid_pairs(n, pairs))
}

/// Random graph with maximum degree at most `max_degree`: pairs are shuffled
/// and inserted greedily while both endpoints have spare degree, keeping each
/// with probability `p`.
pub fn random_bounded_degree(n: usize, max_degree: usize, p: f64, seed: u64) -> Result<Graph> {
    require(n >= 1, || format!("random graph needs n >= 1, got {n}"))?;
    require((0.0..=1.0).contains(&p), || format!("edge probability must lie in [0, 1], got {p}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    for i in (1..pairs.len()).rev() {
        pairs.swap(i, rng.gen_range(0..=i));
    }
    let mut deg = vec![0; n];
    let mut kept = Vec::new();
    for (u, v) in pairs {
        if deg[u] < max_degree && deg[v] < max_degree && rng.gen_bool(p) {
            deg[u] += 1;
            deg[v] += 1;
            kept.push((u, v));
        }
    }
    Ok(Graph::from_valid_pairs(n, kept))
}

/// A uniformly random labelled tree (random attachment) plus `extra` random
/// chords.
pub fn random_sparse(n: usize, extra: usize, seed: u64) -> Result<Graph> {
    require(n >= 1, || format!("random graph needs n >= 1, got {n}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for v in 1..n {
        pairs.push((rng.gen_range(0..v), v));
    }
    if n >= 2 {
        for _ in 0..extra {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v {
                pairs.push((u.min(v), u.max(v)));
            }
        }
    }
    Ok(Graph::from_valid_pairs(n, pairs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_shape() {
        let p = petersen();
        assert_eq!((p.n(), p.m()), (10, 15));
        assert!(p.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn bipartite_degrees() {
        let mut d = complete_bipartite(2, 3).unwrap().degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(d, vec![3, 3, 2, 2, 2]);
    }

    #[test]
    fn random_is_seeded() {
        let a = random_graph(8, 0.3, 42).unwrap();
        let b = random_graph(8, 0.3, 42).unwrap();
        assert_eq!(a, b);
        assert_ne!(random_graph(30, 0.5, 1).unwrap(), random_graph(30, 0.5, 2).unwrap());
        assert_eq!(random_graph(6, 0.0, 9).unwrap().m(), 0);
        assert_eq!(random_graph(6, 1.0, 9).unwrap(), complete(6).unwrap());
    }

    #[test]
    fn parameter_errors() {
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
        assert!(complete(0).is_err());
        assert!(complete_bipartite(0, 2).is_err());
        assert!(random_graph(5, 1.5, 0).is_err());
        assert!(complete_multipartite(&[2, 0]).is_err());
    }

    #[test]
    fn multipartite_and_subdivision() {
        assert_eq!(complete_multipartite(&[2, 3]).unwrap(), complete_bipartite(2, 3).unwrap());
        assert_eq!(complete_multipartite(&[1, 1, 1, 1]).unwrap(), complete(4).unwrap());
        let s = subdivide(&complete(4).unwrap());
        assert_eq!((s.n(), s.m()), (10, 12));
        assert_eq!(s.max_degree(), 3);
        let b = random_bounded_degree(12, 3, 0.8, 5).unwrap();
        assert!(b.max_degree() <= 3);
        let t = random_sparse(9, 0, 3).unwrap();
        assert_eq!(t.m(), 8);
    }
}
