//! The mod-`p` homology Bockstein spectral sequence of a graded abelian group.

use crate::error::Result;
use crate::field::Fp;
use crate::integer::{Cyclic, GradedAbelianGroup, IntegralChainComplex};
use crate::matrix::Matrix;
use crate::steenrod::Prime;

use super::{turn_page, BigradedPage, DifferentialData, Provenance, SpectralSequence, Spot};

/// `(k, q)` with `m = p^k q` and `p ∤ q`.
pub(crate) fn p_valuation(p: u32, mut m: u64) -> (u32, u64) {
    let mut k = 0;
    while m % p as u64 == 0 {
        m /= p as u64;
        k += 1;
    }
    (k, m)
}

/// A class of `E_1`: the reduction of summand `id` in its own degree, or the
/// Tor class one degree up.
#[derive(Clone, Debug)]
struct Class {
    label: String,
    degree: i64,
    /// `Some(k)` for a `Z/p^k` summand
    order: Option<u32>,
    is_tor: bool,
}

fn classes(p: u32, g: &GradedAbelianGroup) -> Vec<Class> {
    let mut out = Vec::new();
    for (m, summands) in g.iter() {
        for (i, c) in summands.iter().enumerate() {
            match *c {
                Cyclic::Free => out.push(Class {
                    label: format!("z{m}.{i}"),
                    degree: m,
                    order: None,
                    is_tor: false,
                }),
                Cyclic::Torsion(order) => {
                    let (k, _) = p_valuation(p, order);
                    if k == 0 {
                        continue;
                    }
                    out.push(Class {
                        label: format!("r{m}.{i}"),
                        degree: m,
                        order: Some(k),
                        is_tor: false,
                    });
                    out.push(Class {
                        label: format!("t{m}.{i}"),
                        degree: m + 1,
                        order: Some(k),
                        is_tor: true,
                    });
                }
            }
        }
    }
    out
}

fn spot(degree: i64) -> Spot {
    (0, degree)
}

/// Pages `E_1 … E_{r_max}` and `E_∞`, single-column bigrading `(0, degree)`.
///
/// Each `Z/p^k` summand in degree `m` contributes a class in degree `m` and a
/// class in degree `m + 1` joined by `d_k`; summands of order prime to `p`
/// are invisible; `Z` summands survive to `E_∞`.
pub fn bockstein_pages(p: Prime, g: &GradedAbelianGroup, r_max: u32) -> SpectralSequence<Fp> {
    let f = p.field();
    let r_max = r_max.max(1);
    let all = classes(p.value(), g);
    let mut page = BigradedPage::new(1);
    for c in &all {
        page.push_class(spot(c.degree), c.label.clone());
    }
    let max_order = all.iter().filter_map(|c| c.order).max().unwrap_or(0);
    let last = r_max.max(max_order);
    let mut ss = SpectralSequence::empty(f, Provenance::Bockstein, 1);
    ss.pages.clear();
    for r in 1..=last {
        let mut d = DifferentialData::bockstein(r);
        let sources: Vec<Spot> = page.spots().map(|(s, _)| s).collect();
        for src in sources {
            let tgt = d.target(src);
            let (Some(sl), Some(tl)) = (page.labels(src), page.labels(tgt)) else {
                continue;
            };
            let mut m = Matrix::filled(tl.len(), sl.len(), 0u32);
            let mut nonzero = false;
            for (j, lab) in sl.iter().enumerate() {
                let Some(c) = all.iter().find(|c| &c.label == lab && c.is_tor && c.degree == src.1) else {
                    continue;
                };
                if c.order != Some(r) {
                    continue;
                }
                let partner = format!("r{}", &c.label[1..]);
                let i = tl.iter().position(|l| *l == partner).expect("partner class survives until d_k");
                m[(i, j)] = 1;
                nonzero = true;
            }
            if nonzero {
                d.insert(src, m);
            }
        }
        let next = turn_page(&f, &page, &d).expect("Bockstein differentials are well formed");
        // bookkeeping: exactly the classes of order r disappear
        let expected = page.total_dim() - 2 * all.iter().filter(|c| c.order == Some(r) && c.is_tor).count();
        assert_eq!(next.total_dim(), expected, "Bockstein bookkeeping failed on E_{r}");
        if r <= r_max {
            ss.pages.push((page, d));
        }
        page = next;
    }
    page.r = u32::MAX;
    ss.infinity = page;
    ss
}

/// Integral homology by Smith normal form, then [`bockstein_pages`].
pub fn bockstein_from_chain_complex(p: Prime, c: &IntegralChainComplex, r_max: u32) -> Result<SpectralSequence<Fp>> {
    Ok(bockstein_pages(p, &c.homology(), r_max))
}
