//! Reducible configurations, the discharging engine and theorem checks.
//!
//! Terminology: a `k`-vertex has degree `k`; a `k_d`-vertex is a `k`-vertex
//! with at least `d` neighbors of degree 2; `Z` is the set of `3_1`-vertices
//! having at least two `3_1`-neighbors.
//!
//! Every pattern is a predicate on an ordered witness tuple. [`scan`]
//! enumerates candidates locally; [`scan_naive`] tries every tuple and is
//! kept as an oracle for small graphs. Symmetric witnesses are normalised
//! by the ordering constraints listed on each pattern.

mod discharge;
mod theorems;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use discharge::{discharge, discharging_bound_check, BoundReport, BoundStatus, ChargeLedger, Rule, RuleSet, Transfer};
pub use theorems::{theorem_check, TheoremId, TheoremReport, TheoremStatus, TheoremVerdict};

/// Degree data every predicate reads.
#[derive(Debug, Clone)]
pub struct LocalStructure<'g> {
    g: &'g Graph,
    deg: Vec<usize>,
    two: Vec<usize>,
    z: Vec<bool>,
}

impl<'g> LocalStructure<'g> {
    pub fn new(g: &'g Graph) -> Self {
        let deg = g.degrees();
        let two: Vec<usize> = (0..g.n()).map(|v| g.neighbors(v).iter().filter(|&&u| deg[u] == 2).count()).collect();
        let is31 = |v: usize| deg[v] == 3 && two[v] >= 1;
        let z = (0..g.n()).map(|v| is31(v) && g.neighbors(v).iter().filter(|&&u| is31(u)).count() >= 2).collect();
        LocalStructure { g, deg, two, z }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn degree(&self, v: usize) -> usize {
        self.deg[v]
    }

    /// Number of neighbors of degree 2.
    pub fn two_neighbors(&self, v: usize) -> usize {
        self.two[v]
    }

    pub fn is_kd(&self, v: usize, k: usize, d: usize) -> bool {
        self.deg[v] == k && self.two[v] >= d
    }

    pub fn is_3_1(&self, v: usize) -> bool {
        self.is_kd(v, 3, 1)
    }

    pub fn is_4_3(&self, v: usize) -> bool {
        self.is_kd(v, 4, 3)
    }

    pub fn in_z(&self, v: usize) -> bool {
        self.z[v]
    }
}

/// `{x : x is a 3_1-vertex with at least two 3_1-neighbors}`.
pub fn z_set(g: &Graph) -> Vec<usize> {
    let loc = LocalStructure::new(g);
    (0..g.n()).filter(|&v| loc.in_z(v)).collect()
}

/// Parameters of the parametrised patterns. `delta` defaults to the
/// maximum degree of the scanned graph; `c` has no default.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct PatternParams {
    pub delta: Option<usize>,
    pub c: Option<usize>,
}

#[derive(Debug, Clone, Copy)]
struct Bound {
    delta: usize,
    c: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    /// `(v)`: degree at most 1.
    L24I,
    /// `(v1, v2, v3)`: triangle, `deg v2 <= c + 1`, `deg v3 = 2`.
    L24Ii,
    /// `(x, y, a, b, c)`: `x < y`, `a < b < c` common 2-neighbors.
    L24Iii,
    /// `(v)`: a `d_{d-1}`-vertex, `2 <= d <= Δ`, all neighbors of degree at most `Δ + c - d`.
    L24Iv,
    S3C1,
    /// `(v)`: a `d_{d-1}`-vertex with `2 <= d <= 4`.
    S3C2,
    /// `(v)`: a `d_d`-vertex with `d >= 5`.
    S3C3,
    /// `(u, v)`: adjacent `3_1`-vertices, `u < v`.
    S3C4,
    /// `(u, a, b)`: 3-vertex `u` with `3_1`-neighbors `a < b`.
    S3C5,
    /// `(u, w)`: `4_2`-vertex `u` with `3_1`-neighbor `w`.
    S3C6,
    /// `(v1, v2, v3, v4)`: path, `deg v1 = 2`, the rest 3-vertices, `v4 ~ v1`.
    L33PathJ1,
    /// As above with `v4 ~ v2`.
    L33PathJ2,
    /// `(a, b, c)`: triangle of `3_1`-vertices, `a < b < c`.
    L43Triangle,
    S41C1,
    /// `(v)`: a `d_{d-1}`-vertex with `d` in `{2, 3}`.
    S41C2,
    /// `(v)`: a `d_d`-vertex with `d >= 4`.
    S41C3,
    /// `(v, z)`: 2-vertex with only 3-neighbors, `z` one of them and in `Z`.
    S41C4,
    /// `(u, w)`: `4_3`-vertex `u` with neighbor `w` a 3-vertex or a `4_3`-vertex.
    S41C5,
    /// `(u, w)`: `4_3`-vertex `u` with `3_1`-neighbor `w`.
    S41C5Listed,
    S42C1,
    /// `(v)`: a `d_{d-1}`-vertex with `d` in `{2, 3}`.
    S42C2,
    /// `(u, a, b)`: `3_1`-vertex `u` with `3_1`-neighbors `a < b`.
    S42C3,
}

impl Pattern {
    pub const ALL: [Pattern; 22] = [
        Pattern::L24I,
        Pattern::L24Ii,
        Pattern::L24Iii,
        Pattern::L24Iv,
        Pattern::S3C1,
        Pattern::S3C2,
        Pattern::S3C3,
        Pattern::S3C4,
        Pattern::S3C5,
        Pattern::S3C6,
        Pattern::L33PathJ1,
        Pattern::L33PathJ2,
        Pattern::L43Triangle,
        Pattern::S41C1,
        Pattern::S41C2,
        Pattern::S41C3,
        Pattern::S41C4,
        Pattern::S41C5,
        Pattern::S41C5Listed,
        Pattern::S42C1,
        Pattern::S42C2,
        Pattern::S42C3,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Pattern::L24I => "L2.4-i",
            Pattern::L24Ii => "L2.4-ii",
            Pattern::L24Iii => "L2.4-iii",
            Pattern::L24Iv => "L2.4-iv",
            Pattern::S3C1 => "S3-C1",
            Pattern::S3C2 => "S3-C2",
            Pattern::S3C3 => "S3-C3",
            Pattern::S3C4 => "S3-C4",
            Pattern::S3C5 => "S3-C5",
            Pattern::S3C6 => "S3-C6",
            Pattern::L33PathJ1 => "L3.3-path-j1",
            Pattern::L33PathJ2 => "L3.3-path-j2",
            Pattern::L43Triangle => "L4.3-triangle",
            Pattern::S41C1 => "S4.1-C1",
            Pattern::S41C2 => "S4.1-C2",
            Pattern::S41C3 => "S4.1-C3",
            Pattern::S41C4 => "S4.1-C4",
            Pattern::S41C5 => "S4.1-C5",
            Pattern::S41C5Listed => "S4.1-C5-listed",
            Pattern::S42C1 => "S4.2-C1",
            Pattern::S42C2 => "S4.2-C2",
            Pattern::S42C3 => "S4.2-C3",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Pattern::L24Iii => 5,
            Pattern::L33PathJ1 | Pattern::L33PathJ2 => 4,
            Pattern::L24Ii | Pattern::S3C5 | Pattern::L43Triangle | Pattern::S42C3 => 3,
            Pattern::S3C4 | Pattern::S3C6 | Pattern::S41C4 | Pattern::S41C5 | Pattern::S41C5Listed => 2,
            _ => 1,
        }
    }

    fn needs_c(self) -> bool {
        matches!(self, Pattern::L24Ii | Pattern::L24Iv)
    }

    /// Re-evaluates the pattern on a witness tuple.
    pub fn holds(self, loc: &LocalStructure, params: &PatternParams, w: &[usize]) -> Result<bool> {
        let b = resolve(loc.g, std::slice::from_ref(&self), params)?;
        Ok(self.holds_bound(loc, b, w))
    }

    fn holds_bound(self, loc: &LocalStructure, b: Bound, w: &[usize]) -> bool {
        let g = loc.g;
        if w.len() != self.arity() || w.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let deg = |v: usize| loc.deg[v];
        let adj = |u: usize, v: usize| g.has_edge(u, v);
        let near_kd_minus = |v: usize, lo: usize, hi: usize| {
            let d = deg(v);
            (lo..=hi).contains(&d) && loc.two[v] + 1 >= d
        };
        match self {
            Pattern::L24I | Pattern::S3C1 | Pattern::S41C1 | Pattern::S42C1 => deg(w[0]) <= 1,
            Pattern::L24Ii => {
                let (v1, v2, v3) = (w[0], w[1], w[2]);
                adj(v1, v2) && adj(v2, v3) && adj(v1, v3) && deg(v2) <= b.c + 1 && deg(v3) == 2
            }
            Pattern::L24Iii => {
                let (x, y) = (w[0], w[1]);
                x < y && w[2] < w[3] && w[3] < w[4] && w[2..].iter().all(|&a| deg(a) == 2 && adj(a, x) && adj(a, y))
            }
            Pattern::L24Iv => {
                let v = w[0];
                let d = deg(v);
                near_kd_minus(v, 2, b.delta) && g.neighbors(v).iter().all(|&u| deg(u) + d <= b.delta + b.c)
            }
            Pattern::S3C2 => near_kd_minus(w[0], 2, 4),
            Pattern::S3C3 => deg(w[0]) >= 5 && loc.two[w[0]] >= deg(w[0]),
            Pattern::S3C4 => w[0] < w[1] && adj(w[0], w[1]) && loc.is_3_1(w[0]) && loc.is_3_1(w[1]),
            Pattern::S3C5 => {
                let (u, a, bb) = (w[0], w[1], w[2]);
                deg(u) == 3 && a < bb && adj(u, a) && adj(u, bb) && loc.is_3_1(a) && loc.is_3_1(bb)
            }
            Pattern::S3C6 => loc.is_kd(w[0], 4, 2) && adj(w[0], w[1]) && loc.is_3_1(w[1]),
            Pattern::L33PathJ1 | Pattern::L33PathJ2 => {
                let (v1, v2, v3, v4) = (w[0], w[1], w[2], w[3]);
                let distinct = v1 != v3 && v1 != v4 && v2 != v4;
                let closing = if self == Pattern::L33PathJ1 { adj(v4, v1) } else { adj(v4, v2) };
                distinct
                    && adj(v1, v2)
                    && adj(v2, v3)
                    && adj(v3, v4)
                    && closing
                    && deg(v1) == 2
                    && deg(v2) == 3
                    && deg(v3) == 3
                    && deg(v4) == 3
            }
            Pattern::L43Triangle => {
                let (a, bb, c) = (w[0], w[1], w[2]);
                a < bb && bb < c && adj(a, bb) && adj(bb, c) && adj(a, c) && w.iter().all(|&v| loc.is_3_1(v))
            }
            Pattern::S41C2 | Pattern::S42C2 => near_kd_minus(w[0], 2, 3),
            Pattern::S41C3 => deg(w[0]) >= 4 && loc.two[w[0]] >= deg(w[0]),
            Pattern::S41C4 => {
                let (v, z) = (w[0], w[1]);
                deg(v) == 2 && adj(v, z) && loc.z[z] && g.neighbors(v).iter().all(|&u| deg(u) == 3)
            }
            Pattern::S41C5 => loc.is_4_3(w[0]) && adj(w[0], w[1]) && (deg(w[1]) == 3 || loc.is_4_3(w[1])),
            Pattern::S41C5Listed => loc.is_4_3(w[0]) && adj(w[0], w[1]) && loc.is_3_1(w[1]),
            Pattern::S42C3 => {
                let (u, a, bb) = (w[0], w[1], w[2]);
                loc.is_3_1(u) && a < bb && adj(u, a) && adj(u, bb) && loc.is_3_1(a) && loc.is_3_1(bb)
            }
        }
    }

    /// Candidate witnesses from local neighborhoods; a superset of the
    /// matches.
    fn candidates(self, g: &Graph, out: &mut Vec<Vec<usize>>) {
        let n = g.n();
        match self.arity() {
            1 => out.extend((0..n).map(|v| vec![v])),
            _ => match self {
                Pattern::L24Ii => {
                    for v3 in (0..n).filter(|&v| g.degree(v) == 2) {
                        let (a, b) = (g.neighbors(v3)[0], g.neighbors(v3)[1]);
                        out.push(vec![a, b, v3]);
                        out.push(vec![b, a, v3]);
                    }
                }
                Pattern::L24Iii => {
                    for x in 0..n {
                        for y in x + 1..n {
                            let common: Vec<usize> =
                                g.neighbors(x).iter().copied().filter(|&a| g.degree(a) == 2 && g.has_edge(a, y)).collect();
                            for i in 0..common.len() {
                                for j in i + 1..common.len() {
                                    for k in j + 1..common.len() {
                                        out.push(vec![x, y, common[i], common[j], common[k]]);
                                    }
                                }
                            }
                        }
                    }
                }
                Pattern::S3C4 => out.extend(g.edges().map(|(u, v)| vec![u, v])),
                Pattern::S3C6 | Pattern::S41C4 | Pattern::S41C5 | Pattern::S41C5Listed => {
                    for u in 0..n {
                        out.extend(g.neighbors(u).iter().map(|&w| vec![u, w]));
                    }
                }
                Pattern::S3C5 | Pattern::S42C3 => {
                    for u in 0..n {
                        let nb = g.neighbors(u);
                        for i in 0..nb.len() {
                            for j in i + 1..nb.len() {
                                out.push(vec![u, nb[i], nb[j]]);
                            }
                        }
                    }
                }
                Pattern::L33PathJ1 | Pattern::L33PathJ2 => {
                    for v1 in (0..n).filter(|&v| g.degree(v) == 2) {
                        for &v2 in g.neighbors(v1) {
                            for &v3 in g.neighbors(v2) {
                                for &v4 in g.neighbors(v3) {
                                    out.push(vec![v1, v2, v3, v4]);
                                }
                            }
                        }
                    }
                }
                Pattern::L43Triangle => {
                    for a in 0..n {
                        for &b in g.neighbors(a).iter().filter(|&&b| b > a) {
                            for &c in g.neighbors(b).iter().filter(|&&c| c > b) {
                                out.push(vec![a, b, c]);
                            }
                        }
                    }
                }
                _ => unreachable!("single-vertex patterns handled above"),
            },
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Pattern::ALL.into_iter().find(|p| p.id() == s).ok_or_else(|| Error::InvalidParameter(format!("unknown pattern `{s}`")))
    }
}

impl Serialize for Pattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Catalog {
    /// The four general patterns; needs `c`.
    Lemma24,
    S3,
    /// Structural lemmas used alongside the lists: the two path patterns and
    /// the `3_1` triangle.
    Lemmas,
    S41,
    S42,
}

impl Catalog {
    pub const ALL: [Catalog; 5] = [Catalog::Lemma24, Catalog::S3, Catalog::Lemmas, Catalog::S41, Catalog::S42];

    pub fn id(self) -> &'static str {
        match self {
            Catalog::Lemma24 => "lemma2.4",
            Catalog::S3 => "s3",
            Catalog::Lemmas => "lemmas",
            Catalog::S41 => "s4.1",
            Catalog::S42 => "s4.2",
        }
    }

    /// Patterns scanned by default. `S4.1-C5-listed` is not included; the
    /// stronger `S4.1-C5` subsumes it.
    pub fn patterns(self) -> &'static [Pattern] {
        match self {
            Catalog::Lemma24 => &[Pattern::L24I, Pattern::L24Ii, Pattern::L24Iii, Pattern::L24Iv],
            Catalog::S3 => &[Pattern::S3C1, Pattern::S3C2, Pattern::S3C3, Pattern::S3C4, Pattern::S3C5, Pattern::S3C6],
            Catalog::Lemmas => &[Pattern::L33PathJ1, Pattern::L33PathJ2, Pattern::L43Triangle],
            Catalog::S41 => &[Pattern::S41C1, Pattern::S41C2, Pattern::S41C3, Pattern::S41C4, Pattern::S41C5],
            Catalog::S42 => &[Pattern::S42C1, Pattern::S42C2, Pattern::S42C3],
        }
    }
}

impl fmt::Display for Catalog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Catalog {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        Catalog::ALL.into_iter().find(|c| c.id() == lower).ok_or_else(|| Error::InvalidParameter(format!("unknown catalog `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ConfigMatch {
    pub pattern: Pattern,
    pub witness: Vec<usize>,
}

fn resolve(g: &Graph, patterns: &[Pattern], params: &PatternParams) -> Result<Bound> {
    let c = match params.c {
        Some(c) => c,
        None if patterns.iter().any(|p| p.needs_c()) => return Err(Error::UnboundParameter("c")),
        None => 0,
    };
    Ok(Bound { delta: params.delta.unwrap_or_else(|| g.max_degree()), c })
}

/// All matches of the given patterns, grouped by pattern in the order
/// given and sorted by witness within a pattern.
pub fn scan(g: &Graph, patterns: &[Pattern], params: &PatternParams) -> Result<Vec<ConfigMatch>> {
    let b = resolve(g, patterns, params)?;
    let loc = LocalStructure::new(g);
    let mut out = Vec::new();
    let mut cands = Vec::new();
    for &p in patterns {
        cands.clear();
        p.candidates(g, &mut cands);
        let mut found: Vec<Vec<usize>> = cands.drain(..).filter(|w| p.holds_bound(&loc, b, w)).collect();
        found.sort();
        found.dedup();
        out.extend(found.into_iter().map(|witness| ConfigMatch { pattern: p, witness }));
    }
    Ok(out)
}

pub fn scan_catalog(g: &Graph, catalog: Catalog, params: &PatternParams) -> Result<Vec<ConfigMatch>> {
    scan(g, catalog.patterns(), params)
}

/// Tuples tried by [`scan_naive`] per pattern are capped at this many.
pub const NAIVE_MAX_TUPLES: usize = 20_000_000;

/// Oracle: evaluates each pattern on every ordered tuple of vertices.
pub fn scan_naive(g: &Graph, patterns: &[Pattern], params: &PatternParams) -> Result<Vec<ConfigMatch>> {
    let b = resolve(g, patterns, params)?;
    let loc = LocalStructure::new(g);
    let n = g.n();
    let mut out = Vec::new();
    for &p in patterns {
        let r = p.arity();
        let total = n.checked_pow(r as u32).unwrap_or(usize::MAX);
        if total > NAIVE_MAX_TUPLES {
            return Err(Error::SizeGuard { what: format!("{p} tuples"), limit: NAIVE_MAX_TUPLES, actual: total });
        }
        if n == 0 {
            continue;
        }
        let mut w = vec![0usize; r];
        loop {
            if p.holds_bound(&loc, b, &w) {
                out.push(ConfigMatch { pattern: p, witness: w.clone() });
            }
            let mut i = r;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                w[i] += 1;
                if w[i] < n {
                    break;
                }
                w[i] = 0;
            }
            if w.iter().all(|&x| x == 0) {
                break;
            }
        }
    }
    Ok(out)
}
