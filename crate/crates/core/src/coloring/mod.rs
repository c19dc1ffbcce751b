//! Colorings, the four verification predicates and exact solvers.

mod available;
mod bounds;
pub mod cnf;
mod solver;
mod verify;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

pub use available::{available_colors, square_degree_outside};
pub use bounds::{bounds_report, BoundsReport, DEFAULT_SIZE_GUARD};
pub use solver::{chromatic, chromatic_with, solve_decision, solve_decision_with, ChromaticResult, SolverOptions, SolverStats};
pub use verify::{verify, verify_odd, verify_proper, verify_square, verify_strong_odd};

/// The four coloring notions handled by the verifiers and the solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ColoringKind {
    Proper,
    Odd,
    StrongOdd,
    Square,
}

impl ColoringKind {
    pub const ALL: [ColoringKind; 4] = [ColoringKind::Proper, ColoringKind::Odd, ColoringKind::StrongOdd, ColoringKind::Square];

    pub fn as_str(self) -> &'static str {
        match self {
            ColoringKind::Proper => "proper",
            ColoringKind::Odd => "odd",
            ColoringKind::StrongOdd => "strong-odd",
            ColoringKind::Square => "square",
        }
    }
}

impl fmt::Display for ColoringKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ColoringKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "proper" => Ok(ColoringKind::Proper),
            "odd" => Ok(ColoringKind::Odd),
            "strong-odd" | "so" => Ok(ColoringKind::StrongOdd),
            "square" => Ok(ColoringKind::Square),
            _ => Err(Error::InvalidParameter(format!("unknown coloring kind `{s}`"))),
        }
    }
}

/// A total coloring with colors in `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<u32>,
    k: u32,
}

impl Coloring {
    pub fn new(colors: Vec<u32>, k: u32) -> Result<Self> {
        if let Some((vertex, &color)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            return Err(Error::ColorOutOfPalette { vertex, color, k });
        }
        Ok(Coloring { colors, k })
    }

    /// Palette size inferred as the largest color used.
    pub fn from_colors(colors: Vec<u32>) -> Result<Self> {
        let k = colors.iter().copied().max().unwrap_or(0);
        Coloring::new(colors, k)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Applies a palette permutation: color `c` becomes `perm[c - 1]`.
    pub fn permute_palette(&self, perm: &[u32]) -> Result<Coloring> {
        if perm.len() != self.k as usize {
            return Err(Error::InvalidParameter(format!("permutation of length {} for palette {}", perm.len(), self.k)));
        }
        Coloring::new(self.colors.iter().map(|&c| perm[c as usize - 1]).collect(), self.k)
    }
}

/// A coloring defined on a subset of the vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialColoring {
    colors: Vec<Option<u32>>,
    k: u32,
}

impl PartialColoring {
    pub fn new(colors: Vec<Option<u32>>, k: u32) -> Result<Self> {
        for (vertex, c) in colors.iter().enumerate() {
            if let Some(color) = *c {
                if color == 0 || color > k {
                    return Err(Error::ColorOutOfPalette { vertex, color, k });
                }
            }
        }
        Ok(PartialColoring { colors, k })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn get(&self, v: usize) -> Option<u32> {
        self.colors.get(v).copied().flatten()
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// The total coloring, if every vertex is colored.
    pub fn to_total(&self) -> Option<Coloring> {
        let colors: Option<Vec<u32>> = self.colors.iter().copied().collect();
        Some(Coloring { colors: colors?, k: self.k })
    }
}

/// One failed local condition: `vertex` sees `count` neighbors colored
/// `color`. For properness failures `neighbor` names the other end of the
/// monochromatic edge (for square colorings, a vertex within distance two).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub vertex: usize,
    pub color: u32,
    pub count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub neighbor: Option<usize>,
}

/// Result of a verification; `ok` iff there are no violations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub kind: ColoringKind,
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl Verdict {
    fn from_violations(kind: ColoringKind, violations: Vec<Violation>) -> Self {
        Verdict { kind, ok: violations.is_empty(), violations }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn palette_checks() {
        assert!(Coloring::new(vec![1, 2, 3], 2).is_err());
        assert!(Coloring::new(vec![0], 2).is_err());
        let c = Coloring::from_colors(vec![1, 3, 2]).unwrap();
        assert_eq!(c.k(), 3);
        assert_eq!(c.permute_palette(&[3, 1, 2]).unwrap().colors(), &[3, 2, 1]);
    }

    #[test]
    fn partial_to_total() {
        let p = PartialColoring::new(vec![Some(1), None], 2).unwrap();
        assert!(p.to_total().is_none());
        assert_eq!(p.get(1), None);
        assert_eq!(p.get(5), None);
        let p = PartialColoring::new(vec![Some(1), Some(2)], 2).unwrap();
        assert_eq!(p.to_total().unwrap().colors(), &[1, 2]);
    }

    #[test]
    fn kinds_parse() {
        for k in ColoringKind::ALL {
            assert_eq!(k.as_str().parse::<ColoringKind>().unwrap(), k);
        }
        assert!("weird".parse::<ColoringKind>().is_err());
    }
}
