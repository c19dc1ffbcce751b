use serde::Serialize;

use super::{chromatic_with, ColoringKind, SolverOptions};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph `bounds_report` accepts without an override.
pub const DEFAULT_SIZE_GUARD: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub chi: u32,
    pub chi_odd: u32,
    pub chi_strong_odd: u32,
    pub chi_square: u32,
    pub max_degree: usize,
    /// `Δ² + 1`.
    pub square_upper: u64,
    pub chain_holds: bool,
    pub claw_free: bool,
    /// `χ_so = χ(G²)`; only asserted for claw-free graphs.
    pub strong_odd_equals_square: bool,
    /// Chain holds, and equality holds whenever the graph is claw-free.
    pub ok: bool,
}

/// Exact values of the four chromatic numbers and the chain between them.
/// Refuses graphs with more than `guard` vertices.
pub fn bounds_report(g: &Graph, guard: usize) -> Result<BoundsReport> {
    if g.n() > guard {
        return Err(Error::SizeGuard { what: "bounds_report vertices".into(), limit: guard, actual: g.n() });
    }
    let opts = SolverOptions::default();
    let chi = |kind| chromatic_with(g, kind, &opts).expect("uncapped").k;
    let (chi_p, chi_o, chi_so, chi_sq) = (chi(ColoringKind::Proper), chi(ColoringKind::Odd), chi(ColoringKind::StrongOdd), chi(ColoringKind::Square));
    let max_degree = g.max_degree();
    let square_upper = (max_degree as u64).pow(2) + 1;
    let chain_holds = chi_p <= chi_o && chi_o <= chi_so && chi_so <= chi_sq && chi_sq as u64 <= square_upper;
    let claw_free = g.is_claw_free();
    let strong_odd_equals_square = chi_so == chi_sq;
    Ok(BoundsReport {
        chi: chi_p,
        chi_odd: chi_o,
        chi_strong_odd: chi_so,
        chi_square: chi_sq,
        max_degree,
        square_upper,
        chain_holds,
        claw_free,
        strong_odd_equals_square,
        ok: chain_holds && (!claw_free || strong_odd_equals_square),
    })
}
