//! Charts for the unstable-algebra spectral sequence of products of
//! Eilenberg-MacLane spaces, and their comparison with Bockstein spectral
//! sequences.
//!
//! The charts are assembled summand by summand. A `Z` in degree `n` gives a
//! tower in column `t − s = n` that survives. A `Z/p^k` (`k ≥ 2`) in degree
//! `n` gives towers in columns `n` and `n + 1` joined by a `d_k` out of every
//! class of column `n + 1`, leaving `k` classes of column `n` at `E_∞`.
//! These differentials are the pattern convergence forces; they are not
//! computed from cochains.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::integer::{Cyclic, GradedAbelianGroup};
use crate::matrix::Matrix;
use crate::steenrod::Prime;

use super::bockstein::{bockstein_pages, p_valuation};
use super::{turn_page, BigradedPage, DifferentialData, Provenance, SpectralSequence, Spot};

/// One factor `K(A, n)` with `A = Z` or `Z/p^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomotopySummand {
    pub degree: i64,
    pub group: Cyclic,
}

#[derive(Clone, Copy, Debug)]
enum Kind {
    Tower,
    /// torsion exponent `k`
    Torsion(u32),
}

fn classify(p: Prime, s: &HomotopySummand) -> Result<Kind> {
    if s.degree < 1 {
        return Err(Error::InvalidArgument(format!(
            "homotopy degree must be at least 1, got {}",
            s.degree
        )));
    }
    match s.group {
        Cyclic::Free => Ok(Kind::Tower),
        Cyclic::Torsion(m) => {
            let (k, rest) = p_valuation(p.value(), m);
            if rest != 1 {
                return Err(Error::Unsupported(format!(
                    "Z/{m} is not a power of p = {p}; only Z and Z/p^k summands have charts"
                )));
            }
            if k == 1 {
                return Err(Error::Unsupported(format!(
                    "Z/{m} (k = 1): the Bockstein joins the two fundamental classes into a free \
                     unstable algebra and no chart is available"
                )));
            }
            Ok(Kind::Torsion(k))
        }
    }
}

/// Pages `E_2 … E_{r_max}` and `E_∞` of the chart for a product of
/// Eilenberg-MacLane spaces, truncated at filtration `s_max`.
///
/// Column `n + 1` classes within `k` of the top of the window have no target
/// inside it; `reliable_s_max` marks the filtrations unaffected by that.
pub fn uass_em_chart(
    p: Prime,
    homotopy: &[HomotopySummand],
    s_max: i64,
    r_max: u32,
) -> Result<SpectralSequence<Fp>> {
    let f = p.field();
    let kinds = homotopy.iter().map(|h| classify(p, h)).collect::<Result<Vec<_>>>()?;
    let r_max = r_max.max(2);
    let mut page = BigradedPage::new(2);
    let mut annotations = Vec::new();
    let mut max_k = 0;
    for (i, (h, kind)) in homotopy.iter().zip(&kinds).enumerate() {
        let n = h.degree;
        for s in 0..=s_max {
            page.push_class((s, s + n), format!("a{i}.{s}"));
            if let Kind::Torsion(_) = kind {
                page.push_class((s, s + n + 1), format!("b{i}.{s}"));
            }
        }
        match kind {
            Kind::Tower => annotations.push(format!(
                "column {n}: infinite tower from Z in degree {n}; every possible group extension is non-trivial"
            )),
            Kind::Torsion(k) => {
                max_k = max_k.max(*k);
                annotations.push(format!(
                    "column {n}: tower of height {k} at E_inf from Z/{} in degree {n}",
                    h.group_order()
                ));
            }
        }
    }
    let last = r_max.max(max_k);
    let mut ss = SpectralSequence::empty(f, Provenance::UassEm, 2);
    ss.pages.clear();
    for r in 2..=last {
        let mut d = DifferentialData::adams(r);
        let sources: Vec<Spot> = page.spots().map(|(s, _)| s).collect();
        for src in sources {
            let tgt = d.target(src);
            let (Some(sl), Some(tl)) = (page.labels(src), page.labels(tgt)) else {
                continue;
            };
            let mut m = Matrix::filled(tl.len(), sl.len(), 0u32);
            let mut nonzero = false;
            for (j, lab) in sl.iter().enumerate() {
                let Some((i, s)) = parse_label(lab, 'b') else { continue };
                if !matches!(kinds[i], Kind::Torsion(k) if k == r) {
                    continue;
                }
                let partner = format!("a{i}.{}", s + r as i64);
                if let Some(row) = tl.iter().position(|l| *l == partner) {
                    m[(row, j)] = 1;
                    nonzero = true;
                }
            }
            if nonzero {
                d.insert(src, m);
            }
        }
        let next = turn_page(&f, &page, &d).expect("forced differentials are well formed");
        if r <= r_max {
            ss.pages.push((page, d));
        }
        page = next;
    }
    page.r = u32::MAX;
    ss.infinity = page;
    ss.reliable_s_max = Some(s_max - max_k as i64);
    ss.annotations = annotations;
    Ok(ss)
}

impl HomotopySummand {
    fn group_order(&self) -> u64 {
        match self.group {
            Cyclic::Free => 0,
            Cyclic::Torsion(m) => m,
        }
    }
}

fn parse_label(label: &str, prefix: char) -> Option<(usize, i64)> {
    let rest = label.strip_prefix(prefix)?;
    let (i, s) = rest.split_once('.')?;
    Some((i.parse().ok()?, s.parse().ok()?))
}

/// One line of an agreement report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub degree: i64,
    /// `None` for the `E_∞` comparison
    pub page: Option<u32>,
    pub bockstein: bool,
    pub chart: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgreementReport {
    pub prime: u32,
    pub r_max: u32,
    pub agree: bool,
    pub rows: Vec<ComparisonRow>,
    pub mismatches: Vec<String>,
}

/// Compares the Bockstein spectral sequence of `g` with the chart of the
/// product of `K(g_m, m)`: per page `2 ≤ r ≤ r_max`, a nonzero Bockstein
/// `d_r` out of degree `m + 1` against a nonzero chart `d_r` family from
/// column `m + 1` to column `m`; and nonzero Bockstein `E_∞` in degree `m`
/// against an infinite surviving tower in column `m`.
pub fn compare_bockstein_uass(p: Prime, g: &GradedAbelianGroup, r_max: u32) -> Result<AgreementReport> {
    let f = p.field();
    let homotopy: Vec<HomotopySummand> = g
        .iter()
        .flat_map(|(degree, cs)| cs.iter().map(move |&group| HomotopySummand { degree, group }))
        .collect();
    let max_k = homotopy
        .iter()
        .map(|h| classify(p, h))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .map(|k| match k {
            Kind::Tower => 0,
            Kind::Torsion(k) => k,
        })
        .max()
        .unwrap_or(0);
    let r_max = r_max.max(2);
    let s_max = 2 * (max_k.max(r_max) as i64) + 2;
    let chart = uass_em_chart(p, &homotopy, s_max, r_max)?;
    let bock = bockstein_pages(p, g, r_max);
    let reliable = chart.reliable_s_max.expect("charts record their reliable range");

    let degrees: BTreeSet<i64> = g.degrees().flat_map(|d| [d - 1, d, d + 1]).collect();
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    for &m in &degrees {
        for r in 2..=r_max {
            let b = bock
                .differential(r)
                .and_then(|d| d.get((0, m + 1)))
                .is_some_and(|mat| !mat.is_zero(&f));
            let d = chart.differential(r).expect("chart stores every page up to r_max");
            let hits: Vec<i64> = d
                .nonzero_sources(&f)
                .into_iter()
                .filter(|&(s, t)| t - s == m + 1)
                .map(|(s, _)| s)
                .collect();
            let c = !hits.is_empty();
            if c {
                // a family: every source filtration whose target is in the window
                let expected: Vec<i64> = (0..=s_max - r as i64).collect();
                if hits != expected {
                    mismatches.push(format!(
                        "degree {m}, d_{r}: chart differential is not a full family (sources at s = {hits:?})"
                    ));
                }
            }
            if b != c {
                mismatches.push(format!("degree {m}, d_{r}: bockstein {b}, chart {c}"));
            }
            rows.push(ComparisonRow {
                degree: m,
                page: Some(r),
                bockstein: b,
                chart: c,
            });
        }
        let b = bock.infinity.dim((0, m)) > 0;
        let c = (0..=reliable).all(|s| chart.infinity.dim((s, s + m)) > 0);
        if b != c {
            mismatches.push(format!("degree {m}, E_inf: bockstein {b}, chart tower infinite {c}"));
        }
        rows.push(ComparisonRow {
            degree: m,
            page: None,
            bockstein: b,
            chart: c,
        });
    }
    Ok(AgreementReport {
        prime: p.value(),
        r_max,
        agree: mismatches.is_empty(),
        rows,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(p: u32) -> Prime {
        Prime::new(p).unwrap()
    }

    fn z(degree: i64) -> HomotopySummand {
        HomotopySummand {
            degree,
            group: Cyclic::Free,
        }
    }

    fn tors(degree: i64, m: u64) -> HomotopySummand {
        HomotopySummand {
            degree,
            group: Cyclic::Torsion(m),
        }
    }

    #[test]
    fn integral_tower() {
        let ss = uass_em_chart(p(2), &[z(3)], 6, 4).unwrap();
        let e2 = ss.page(2).unwrap();
        assert_eq!(e2.total_dim(), 7);
        assert!((0..=6).all(|s| e2.dim((s, s + 3)) == 1));
        assert!(ss.infinity.same_dims(e2));
        assert!(ss.pages.iter().all(|(_, d)| d.maps().count() == 0));
        assert!(ss.annotations[0].contains("every possible group extension is non-trivial"));
    }

    #[test]
    fn torsion_pattern_k2() {
        let f = p(3).field();
        let ss = uass_em_chart(p(3), &[tors(2, 9)], 8, 4).unwrap();
        assert!(ss.differential(3).unwrap().is_zero(&f));
        let d2 = ss.differential(2).unwrap();
        let sources = d2.nonzero_sources(&f);
        assert_eq!(sources, (0..=6).map(|s| (s, s + 3)).collect::<Vec<_>>());
        let inf = &ss.infinity;
        assert_eq!(inf.dim((0, 2)), 1);
        assert_eq!(inf.dim((1, 3)), 1);
        assert!((2..=8).all(|s| inf.dim((s, s + 2)) == 0));
        // column 3 is dead below the truncation guard
        assert_eq!(ss.reliable_s_max, Some(6));
        assert!((0..=6).all(|s| inf.dim((s, s + 3)) == 0));
    }

    #[test]
    fn empty_and_rejected_inputs() {
        let ss = uass_em_chart(p(2), &[], 5, 3).unwrap();
        assert!(ss.page(2).unwrap().is_zero() && ss.infinity.is_zero());
        assert!(matches!(uass_em_chart(p(2), &[tors(2, 2)], 5, 3), Err(Error::Unsupported(_))));
        assert!(matches!(uass_em_chart(p(2), &[tors(2, 12)], 5, 3), Err(Error::Unsupported(_))));
        assert!(matches!(uass_em_chart(p(2), &[z(0)], 5, 3), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn agreement_examples() {
        let g = GradedAbelianGroup::new().with(3, Cyclic::Torsion(4));
        let rep = compare_bockstein_uass(p(2), &g, 4).unwrap();
        assert!(rep.agree, "{:?}", rep.mismatches);
        assert!(rep.rows.iter().any(|r| r.degree == 3 && r.page == Some(2) && r.bockstein && r.chart));

        let g = GradedAbelianGroup::new().with(2, Cyclic::Free);
        let rep = compare_bockstein_uass(p(3), &g, 4).unwrap();
        assert!(rep.agree);
        assert!(rep.rows.iter().any(|r| r.degree == 2 && r.page.is_none() && r.bockstein && r.chart));

        let g = GradedAbelianGroup::new().with(5, Cyclic::Torsion(25)).with(5, Cyclic::Torsion(125));
        let rep = compare_bockstein_uass(p(5), &g, 4).unwrap();
        assert!(rep.agree, "{:?}", rep.mismatches);
        for r in [2, 3] {
            assert!(rep.rows.iter().any(|row| row.degree == 5 && row.page == Some(r) && row.chart));
        }
    }
}
