use std::collections::BTreeSet;

use super::PartialColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Number of neighbors of `v` in `G² - S`.
pub fn square_degree_outside(g: &Graph, deleted: &[usize], v: usize) -> usize {
    let sq = g.square();
    sq.neighbors(v).iter().filter(|u| !deleted.contains(u)).count()
}

/// Colors of the palette not used by any colored `G²`-neighbor of `v`
/// outside the deleted set `S`.
///
/// `phi` must leave every vertex of `S` uncolored and `v` must belong to
/// `S`. The result has at least `k - deg(v)` elements, where the degree is
/// taken in `G² - S` (see [`square_degree_outside`]).
pub fn available_colors(g: &Graph, deleted: &[usize], phi: &PartialColoring, v: usize) -> Result<BTreeSet<u32>> {
    if !deleted.contains(&v) {
        return Err(Error::NotDeleted(v));
    }
    if let Some(&s) = deleted.iter().find(|&&s| phi.get(s).is_some()) {
        return Err(Error::ColoredDeletedVertex(s));
    }
    let mut avail: BTreeSet<u32> = (1..=phi.k()).collect();
    for &u in g.square().neighbors(v) {
        if let Some(c) = phi.get(u) {
            avail.remove(&c);
        }
    }
    Ok(avail)
}
