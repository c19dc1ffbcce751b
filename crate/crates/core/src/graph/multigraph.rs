use crate::error::{Error, Result};

/// Loopless multigraph; parallel edges are separate instances indexed in
/// insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    incident: Vec<Vec<usize>>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut incident = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { n, vertex: u.max(v), u, v });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            incident[u].push(i);
            incident[v].push(i);
        }
        Ok(Multigraph { n, edges, incident })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Edge instances incident to `v`, in index order.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    /// Degree counting parallel edges with multiplicity.
    pub fn degree(&self, v: usize) -> usize {
        self.incident[v].len()
    }

    pub fn other_end(&self, edge: usize, v: usize) -> usize {
        let (a, b) = self.edges[edge];
        if a == v {
            b
        } else {
            a
        }
    }
}

/// An orientation of every edge instance of a [`Multigraph`], stored as the
/// head of each arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    base: Multigraph,
    heads: Vec<usize>,
}

impl Orientation {
    /// `heads[i]` must be an endpoint of edge instance `i`.
    pub fn new(base: Multigraph, heads: Vec<usize>) -> Result<Self> {
        if heads.len() != base.edges.len() {
            return Err(Error::InvalidParameter(format!(
                "orientation has {} arcs for {} edges",
                heads.len(),
                base.edges.len()
            )));
        }
        for (i, (&h, &(u, v))) in heads.iter().zip(&base.edges).enumerate() {
            if h != u && h != v {
                return Err(Error::InvalidParameter(format!("head {h} of edge {i} is not an endpoint")));
            }
        }
        Ok(Orientation { base, heads })
    }

    pub fn base(&self) -> &Multigraph {
        &self.base
    }

    pub fn head(&self, edge: usize) -> usize {
        self.heads[edge]
    }

    pub fn tail(&self, edge: usize) -> usize {
        self.base.other_end(edge, self.heads[edge])
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.heads.iter().filter(|&&h| h == v).count()
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.base.n];
        for &h in &self.heads {
            d[h] += 1;
        }
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_edges_count() {
        let g = Multigraph::new(3, vec![(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.degree(1), 3);
        assert_eq!(g.incident(0), &[0, 1]);
        assert_eq!(Multigraph::new(2, vec![(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn in_degrees_follow_heads() {
        let g = Multigraph::new(3, vec![(0, 1), (0, 1), (1, 2)]).unwrap();
        let d = Orientation::new(g, vec![1, 0, 1]).unwrap();
        assert_eq!(d.in_degrees(), vec![1, 2, 0]);
        assert_eq!(d.tail(2), 2);
        assert_eq!(d.in_degree(1), 2);
        let g = Multigraph::new(3, vec![(0, 1)]).unwrap();
        assert!(Orientation::new(g, vec![2]).is_err());
    }
}
