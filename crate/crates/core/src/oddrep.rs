//! Systems of odd representatives.
//!
//! Given sets `A_1..A_d` with `|A_i| >= 2` for `i < d` and an anchor
//! `α ∈ A_d`, [`solve_oddrep`] picks `c_i ∈ A_i` with `c_d = α` so that every
//! value used occurs an odd number of times. The sets are read as edges of a
//! multigraph on the colors; an orientation in which `α` has even in-degree
//! and every other color has odd or zero in-degree gives the representatives
//! as arc heads.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Multigraph, Orientation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddRepInstance<C: Ord> {
    pub sets: Vec<BTreeSet<C>>,
    pub anchor: C,
}

impl<C: Ord + Clone> OddRepInstance<C> {
    /// Checks the instance invariants.
    pub fn new(sets: Vec<BTreeSet<C>>, anchor: C) -> Result<Self> {
        let inst = OddRepInstance { sets, anchor };
        inst.validate()?;
        Ok(inst)
    }

    pub fn d(&self) -> usize {
        self.sets.len()
    }

    pub fn validate(&self) -> Result<()> {
        let d = self.sets.len();
        if d < 2 {
            return Err(Error::OddRepInstance(format!("need at least 2 sets, got {d}")));
        }
        for (i, a) in self.sets[..d - 1].iter().enumerate() {
            if a.len() < 2 {
                return Err(Error::OddRepInstance(format!("set {} has {} elements, need at least 2", i + 1, a.len())));
            }
        }
        if !self.sets[d - 1].contains(&self.anchor) {
            return Err(Error::OddRepInstance(format!("anchor is not in set {d}")));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddRepVerdict<C> {
    pub ok: bool,
    /// 1-based indices `i` with `c_i ∉ A_i`.
    pub not_members: Vec<usize>,
    /// Values occurring an even number of times, with their counts.
    pub even_values: Vec<(C, usize)>,
}

pub fn verify_oddrep<C: Ord + Clone>(inst: &OddRepInstance<C>, sol: &[C]) -> Result<OddRepVerdict<C>> {
    if sol.len() != inst.sets.len() {
        return Err(Error::OddRepInstance(format!("solution has {} entries for {} sets", sol.len(), inst.sets.len())));
    }
    let not_members: Vec<usize> = sol.iter().zip(&inst.sets).enumerate().filter(|(_, (c, a))| !a.contains(c)).map(|(i, _)| i + 1).collect();
    let mut counts: BTreeMap<&C, usize> = BTreeMap::new();
    for c in sol {
        *counts.entry(c).or_insert(0) += 1;
    }
    let even_values: Vec<(C, usize)> = counts.into_iter().filter(|(_, n)| n % 2 == 0).map(|(c, n)| (c.clone(), n)).collect();
    Ok(OddRepVerdict { ok: not_members.is_empty() && even_values.is_empty(), not_members, even_values })
}

/// How each `A_i` (`i < d`) is cut down to two elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Shrink {
    /// The two smallest colors.
    #[default]
    Smallest,
    /// Two colors drawn with a seeded ChaCha8 generator.
    Seeded(u64),
}

/// One step of the chain orientation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainStep<C> {
    /// Position `i` (1-based) in the vertex ordering.
    pub position: usize,
    /// 0-based index of the set whose edge is `e_i`.
    pub edge: usize,
    pub from: C,
    pub to: C,
    /// In-degree of `v_i` just before orienting `e_i`.
    pub indegree_before: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddRepTrace<C> {
    /// The two-element sets actually used.
    pub shrunk: Vec<(C, C)>,
    /// `v_1, v_2, ...` with `v_1 = α`.
    pub ordering: Vec<C>,
    pub chain: Vec<ChainStep<C>>,
    /// Final in-degree of every color.
    pub indegrees: Vec<(C, usize)>,
    /// `α` even, every other color odd or zero.
    pub orientation_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddRepSolution<C> {
    pub sequence: Vec<C>,
    pub trace: OddRepTrace<C>,
}

pub fn solve_oddrep<C: Ord + Clone>(inst: &OddRepInstance<C>) -> Result<OddRepSolution<C>> {
    solve_oddrep_with(inst, Shrink::Smallest)
}

pub fn solve_oddrep_with<C: Ord + Clone>(inst: &OddRepInstance<C>, shrink: Shrink) -> Result<OddRepSolution<C>> {
    inst.validate()?;
    let d = inst.d();
    let mut rng = match shrink {
        Shrink::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        Shrink::Smallest => None,
    };
    let shrunk: Vec<(C, C)> = inst.sets[..d - 1]
        .iter()
        .map(|a| {
            let items: Vec<&C> = a.iter().collect();
            let pair: Vec<&C> = match rng.as_mut() {
                Some(r) => items.choose_multiple(r, 2).copied().collect(),
                None => items[..2].to_vec(),
            };
            (pair[0].clone(), pair[1].clone())
        })
        .collect();

    let colors: Vec<C> = inst.sets.iter().flatten().cloned().collect::<BTreeSet<C>>().into_iter().collect();
    let index = |c: &C| colors.binary_search(c).expect("color of some set");
    let edges: Vec<(usize, usize)> = shrunk.iter().map(|(a, b)| (index(a), index(b))).collect();
    let g = Multigraph::new(colors.len(), edges)?;
    let n = g.n();

    // ordering and chain edges: chain[i] is e_{i+1}, joining order[i] and order[i+1]
    let mut order = vec![index(&inst.anchor)];
    let mut pos = vec![usize::MAX; n];
    pos[order[0]] = 0;
    let mut chain: Vec<Option<usize>> = Vec::new();
    while order.len() < n {
        let v = *order.last().unwrap();
        // incident lists are in edge order, so the first hit is the lowest-index edge
        let mut best: Option<(usize, usize)> = None;
        for &e in g.incident(v) {
            let w = g.other_end(e, v);
            if pos[w] == usize::MAX && best.map_or(true, |(bw, _)| w < bw) {
                best = Some((w, e));
            }
        }
        let (next, e) = match best {
            Some((w, e)) => (w, Some(e)),
            None => ((0..n).find(|&w| pos[w] == usize::MAX).unwrap(), None),
        };
        chain.push(e);
        pos[next] = order.len();
        order.push(next);
    }

    let is_chain: BTreeSet<usize> = chain.iter().flatten().copied().collect();
    let mut heads = vec![usize::MAX; g.edges().len()];
    let mut indeg = vec![0usize; n];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if !is_chain.contains(&e) {
            let head = if pos[a] < pos[b] { a } else { b };
            heads[e] = head;
            indeg[head] += 1;
        }
    }
    let mut steps = Vec::new();
    for (i0, e) in chain.iter().enumerate() {
        let Some(e) = *e else { continue };
        let i = i0 + 1;
        let (vi, vnext) = (order[i0], order[i0 + 1]);
        let before = indeg[vi];
        let (from, to) = if before % 2 == (i - 1).min(1) { (vi, vnext) } else { (vnext, vi) };
        heads[e] = to;
        indeg[to] += 1;
        steps.push(ChainStep { position: i, edge: e, from: colors[from].clone(), to: colors[to].clone(), indegree_before: before });
    }

    let orientation = Orientation::new(g, heads)?;
    let alpha = order[0];
    let indegrees = orientation.in_degrees();
    let orientation_ok = (0..n).all(|x| if x == alpha { indegrees[x] % 2 == 0 } else { indegrees[x] == 0 || indegrees[x] % 2 == 1 });
    let mut sequence: Vec<C> = (0..d - 1).map(|e| colors[orientation.head(e)].clone()).collect();
    sequence.push(inst.anchor.clone());
    Ok(OddRepSolution {
        sequence,
        trace: OddRepTrace {
            shrunk,
            ordering: order.iter().map(|&v| colors[v].clone()).collect(),
            chain: steps,
            indegrees: colors.iter().cloned().zip(indegrees).collect(),
            orientation_ok,
        },
    })
}

/// Candidate count above which [`brute_force_oddrep`] refuses to run.
pub const BRUTEFORCE_MAX_CANDIDATES: usize = 1_000_000;

/// Every system of odd representatives ending in the anchor, in
/// lexicographic order.
pub fn brute_force_oddrep<C: Ord + Clone>(inst: &OddRepInstance<C>) -> Result<Vec<Vec<C>>> {
    inst.validate()?;
    let d = inst.d();
    let lists: Vec<Vec<C>> = inst.sets[..d - 1].iter().map(|a| a.iter().cloned().collect()).collect();
    let mut total: usize = 1;
    for l in &lists {
        total = total.saturating_mul(l.len());
    }
    if total > BRUTEFORCE_MAX_CANDIDATES {
        return Err(Error::SizeGuard { what: "odd-representative candidates".into(), limit: BRUTEFORCE_MAX_CANDIDATES, actual: total });
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; d - 1];
    loop {
        let mut seq: Vec<C> = idx.iter().zip(&lists).map(|(&i, l)| l[i].clone()).collect();
        seq.push(inst.anchor.clone());
        if verify_oddrep(inst, &seq)?.ok {
            out.push(seq);
        }
        // odometer with the last position fastest, for lexicographic order
        let mut j = d - 1;
        loop {
            if j == 0 {
                return Ok(out);
            }
            j -= 1;
            idx[j] += 1;
            if idx[j] < lists[j].len() {
                break;
            }
            idx[j] = 0;
        }
    }
}
