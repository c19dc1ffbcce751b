use serde::Serialize;

use crate::coloring::{chromatic, ColoringKind};
use crate::density::{corollary_premise, Premise, PremiseReport};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::ExactInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TheoremId {
    /// `mad <= 20/7` gives `χ_so <= Δ + 4`.
    #[serde(rename = "mad-20/7")]
    Mad20Over7,
    /// `Δ >= 4` and `mad <= 30/11` give `χ_so <= Δ + 3`.
    #[serde(rename = "mad-30/11-high-degree")]
    Mad30Over11HighDegree,
    /// `C4`-free, subcubic and `mad <= 30/11` give `χ_so <= 6`.
    #[serde(rename = "mad-30/11-subcubic")]
    Mad30Over11Subcubic,
    /// `(mad - 2)(g - 2) < 4` and girth at least 7 give `χ_so <= Δ + 4`.
    #[serde(rename = "girth-7")]
    Girth7,
    /// `(mad - 2)(g - 2) < 4` and girth at least 8 give `χ_so <= Δ + 3`.
    #[serde(rename = "girth-8")]
    Girth8,
}

impl TheoremId {
    pub const ALL: [TheoremId; 5] =
        [TheoremId::Mad20Over7, TheoremId::Mad30Over11HighDegree, TheoremId::Mad30Over11Subcubic, TheoremId::Girth7, TheoremId::Girth8];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremStatus {
    Pass,
    Fail,
    Inapplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub theorem: TheoremId,
    pub premise: Premise,
    /// Why the premise fails, if it does.
    pub reason: Option<String>,
    pub bound: u32,
    pub chi_so: Option<u32>,
    pub status: TheoremStatus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport<T: ExactInt> {
    pub premises: PremiseReport<T>,
    pub chi_so: Option<u32>,
    pub verdicts: Vec<TheoremVerdict>,
}

impl<T: ExactInt> TheoremReport<T> {
    /// No applicable bound is violated.
    pub fn ok(&self) -> bool {
        self.verdicts.iter().all(|v| v.status != TheoremStatus::Fail)
    }
}

/// Evaluates every premise exactly and, when at least one holds, computes
/// `χ_so` and compares it with each applicable bound.
pub fn theorem_check<T: ExactInt>(g: &Graph, guard: usize) -> Result<TheoremReport<T>> {
    if g.n() > guard {
        return Err(Error::SizeGuard { what: "theorem_check vertices".into(), limit: guard, actual: g.n() });
    }
    let pr = corollary_premise::<T>(g);
    let delta = pr.max_degree as u32;
    let girth = pr.girth.finite();
    let girth_at_least = |k: usize| girth.map_or(true, |x| x >= k);
    let mad_s = crate::scalar::ratio_string(&pr.mad);

    let mut rows: Vec<(TheoremId, Premise, Option<String>, u32)> = Vec::new();
    let why = |parts: Vec<(bool, String)>| -> Option<String> {
        let failed: Vec<String> = parts.into_iter().filter(|(ok, _)| !ok).map(|(_, s)| s).collect();
        (!failed.is_empty()).then(|| failed.join("; "))
    };
    let p = pr.mad_at_most_20_7;
    rows.push((TheoremId::Mad20Over7, p, why(vec![(p.holds(), format!("mad {mad_s} > 20/7"))]), delta + 4));
    let mad_ok = pr.mad <= crate::scalar::frac(30, 11);
    rows.push((
        TheoremId::Mad30Over11HighDegree,
        pr.high_degree_mad_at_most_30_11,
        why(vec![(delta >= 4, format!("max degree {delta} < 4")), (mad_ok, format!("mad {mad_s} > 30/11"))]),
        delta + 3,
    ));
    rows.push((
        TheoremId::Mad30Over11Subcubic,
        pr.subcubic_c4_free_mad_at_most_30_11,
        why(vec![
            (delta <= 3, format!("max degree {delta} > 3")),
            (pr.c4_free, "contains a 4-cycle".into()),
            (mad_ok, format!("mad {mad_s} > 30/11")),
        ]),
        6,
    ));
    for (id, k, bound) in [(TheoremId::Girth7, 7, delta + 4), (TheoremId::Girth8, 8, delta + 3)] {
        // forests have infinite girth and (mad - 2)(g - 2) is undefined; the
        // first theorem already covers them since their mad is below 2
        let premise = match pr.proxy {
            Premise::NotApplicable => Premise::NotApplicable,
            proxy => Premise::from_bool(proxy.holds() && girth_at_least(k)),
        };
        let reason = match pr.proxy {
            Premise::NotApplicable => Some("acyclic: girth is infinite".into()),
            _ => why(vec![
                (pr.proxy.holds(), format!("(mad - 2)(girth - 2) = {} >= 4", pr.proxy_product.as_ref().map(crate::scalar::ratio_string).unwrap_or_default())),
                (girth_at_least(k), format!("girth {} < {k}", pr.girth)),
            ]),
        };
        rows.push((id, premise, reason, bound));
    }

    let chi_so = rows.iter().any(|r| r.1.holds()).then(|| chromatic(g, ColoringKind::StrongOdd).k);
    let verdicts = rows
        .into_iter()
        .map(|(theorem, premise, reason, bound)| {
            let status = match (premise.holds(), chi_so) {
                (true, Some(k)) if k <= bound => TheoremStatus::Pass,
                (true, _) => TheoremStatus::Fail,
                (false, _) => TheoremStatus::Inapplicable,
            };
            TheoremVerdict { theorem, premise, reason, bound, chi_so: if premise.holds() { chi_so } else { None }, status }
        })
        .collect();
    Ok(TheoremReport { premises: pr, chi_so, verdicts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::DEFAULT_SIZE_GUARD;
    use crate::graph::generators::*;

    fn status(r: &TheoremReport<i64>, id: TheoremId) -> TheoremStatus {
        r.verdicts.iter().find(|v| v.theorem == id).unwrap().status
    }

    #[test]
    fn cycle_seven() {
        let r = theorem_check::<i64>(&cycle(7).unwrap(), DEFAULT_SIZE_GUARD).unwrap();
        assert_eq!(status(&r, TheoremId::Mad20Over7), TheoremStatus::Pass);
        assert_eq!(status(&r, TheoremId::Girth7), TheoremStatus::Pass);
        assert_eq!(status(&r, TheoremId::Girth8), TheoremStatus::Inapplicable);
        assert!(r.chi_so.unwrap() <= 6);
        assert!(r.ok());
    }

    #[test]
    fn petersen_inapplicable() {
        let r = theorem_check::<i64>(&petersen(), DEFAULT_SIZE_GUARD).unwrap();
        assert!(r.verdicts.iter().all(|v| v.status == TheoremStatus::Inapplicable));
        assert_eq!(r.chi_so, None);
        let v = &r.verdicts[0];
        assert_eq!(v.reason.as_deref(), Some("mad 3/1 > 20/7"));
    }

    #[test]
    fn subdivided_k4() {
        let g = subdivide(&complete(4).unwrap());
        let r = theorem_check::<i64>(&g, DEFAULT_SIZE_GUARD).unwrap();
        assert_eq!(status(&r, TheoremId::Mad30Over11Subcubic), TheoremStatus::Pass);
        assert_eq!(status(&r, TheoremId::Mad30Over11HighDegree), TheoremStatus::Inapplicable);
        assert!(r.ok());
    }

    #[test]
    fn guard() {
        assert!(matches!(theorem_check::<i64>(&cycle(30).unwrap(), DEFAULT_SIZE_GUARD), Err(Error::SizeGuard { .. })));
    }
}
