//! Bigraded spectral-sequence pages, differentials and page turning.
//!
//! Spots are indexed `(s, t)`: filtration `s` and internal degree `t`.
//! Adams-graded engines use `d_r: (s, t) → (s + r, t + r − 1)`; the Bockstein
//! engine keeps everything in the single column `s = 0` with
//! `d_r: (0, t) → (0, t − 1)`. The shift travels with each
//! [`DifferentialData`].

mod bockstein;
mod render;
mod uass;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{Matrix, Quotient};

pub use bockstein::{bockstein_from_chain_complex, bockstein_pages};
pub use render::{render_chart, ChartFormat, PageSelector};
pub use uass::{compare_bockstein_uass, uass_em_chart, AgreementReport, ComparisonRow, HomotopySummand};

pub type Spot = (i64, i64);

/// One page `E_r`: finitely supported dimensions, optionally with one label
/// per basis vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BigradedPage {
    pub r: u32,
    dims: BTreeMap<Spot, usize>,
    labels: BTreeMap<Spot, Vec<String>>,
}

impl BigradedPage {
    pub fn new(r: u32) -> Self {
        BigradedPage {
            r,
            ..Default::default()
        }
    }

    pub fn set_dim(&mut self, spot: Spot, dim: usize) {
        self.labels.remove(&spot);
        if dim == 0 {
            self.dims.remove(&spot);
        } else {
            self.dims.insert(spot, dim);
        }
    }

    /// Appends a labelled basis vector at `spot`.
    pub fn push_class(&mut self, spot: Spot, label: impl Into<String>) {
        let labels = self.labels.entry(spot).or_default();
        labels.push(label.into());
        self.dims.insert(spot, labels.len());
    }

    pub fn dim(&self, spot: Spot) -> usize {
        self.dims.get(&spot).copied().unwrap_or(0)
    }

    pub fn labels(&self, spot: Spot) -> Option<&[String]> {
        self.labels.get(&spot).map(|v| v.as_slice())
    }

    pub fn is_labelled(&self) -> bool {
        !self.labels.is_empty() || self.dims.is_empty()
    }

    /// Nonzero spots in `(s, t)` order.
    pub fn spots(&self) -> impl Iterator<Item = (Spot, usize)> + '_ {
        self.dims.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    /// Same dimensions, labels ignored.
    pub fn same_dims(&self, other: &BigradedPage) -> bool {
        self.dims == other.dims
    }
}

/// The differential `d_r` on one page: a matrix per nonzero source spot,
/// with shape `dim(target) x dim(source)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DifferentialData<E> {
    pub r: u32,
    pub shift: (i64, i64),
    maps: BTreeMap<Spot, Matrix<E>>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> DifferentialData<E> {
    /// `d_r: (s, t) → (s + r, t + r − 1)`.
    pub fn adams(r: u32) -> Self {
        Self::with_shift(r, (r as i64, r as i64 - 1))
    }

    /// Single-column homological Bockstein convention `(0, t) → (0, t − 1)`.
    pub fn bockstein(r: u32) -> Self {
        Self::with_shift(r, (0, -1))
    }

    pub fn with_shift(r: u32, shift: (i64, i64)) -> Self {
        DifferentialData {
            r,
            shift,
            maps: BTreeMap::new(),
        }
    }

    pub fn target(&self, source: Spot) -> Spot {
        (source.0 + self.shift.0, source.1 + self.shift.1)
    }

    pub fn insert(&mut self, source: Spot, m: Matrix<E>) {
        self.maps.insert(source, m);
    }

    pub fn get(&self, source: Spot) -> Option<&Matrix<E>> {
        self.maps.get(&source)
    }

    pub fn maps(&self) -> impl Iterator<Item = (Spot, &Matrix<E>)> {
        self.maps.iter().map(|(&k, v)| (k, v))
    }

    /// Source spots carrying a nonzero matrix.
    pub fn nonzero_sources<F: Field<Elem = E>>(&self, f: &F) -> Vec<Spot> {
        self.maps
            .iter()
            .filter(|(_, m)| !m.is_zero(f))
            .map(|(&k, _)| k)
            .collect()
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.maps.values().all(|m| m.is_zero(f))
    }
}

/// Where a spectral sequence came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Bockstein,
    /// Differentials transcribed from the forced pattern, not computed from
    /// cochains.
    UassEm,
    Ext,
    Totalization,
    Custom,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectralSequence<F: Field> {
    pub field: F,
    pub provenance: Provenance,
    /// `(E_r, d_r)` for consecutive `r` starting at the first page.
    pub pages: Vec<(BigradedPage, DifferentialData<F::Elem>)>,
    pub infinity: BigradedPage,
    /// Filtrations above this may be affected by truncation.
    pub reliable_s_max: Option<i64>,
    pub annotations: Vec<String>,
}

impl<F: Field> SpectralSequence<F> {
    pub fn empty(field: F, provenance: Provenance, first_page: u32) -> Self {
        SpectralSequence {
            field,
            provenance,
            pages: vec![(BigradedPage::new(first_page), DifferentialData::with_shift(first_page, (0, 0)))],
            infinity: BigradedPage::new(u32::MAX),
            reliable_s_max: None,
            annotations: Vec::new(),
        }
    }

    pub fn first_page(&self) -> u32 {
        self.pages.first().map_or(1, |(p, _)| p.r)
    }

    pub fn page(&self, r: u32) -> Option<&BigradedPage> {
        self.pages.iter().find(|(p, _)| p.r == r).map(|(p, _)| p)
    }

    pub fn differential(&self, r: u32) -> Option<&DifferentialData<F::Elem>> {
        self.pages.iter().find(|(p, _)| p.r == r).map(|(_, d)| d)
    }

    pub fn last_page(&self) -> u32 {
        self.pages.last().map_or(1, |(p, _)| p.r)
    }
}

/// Computes `E_{r+1}` from `E_r` and `d_r`.
///
/// Validates matrix shapes and `d ∘ d = 0`. Labels, when present, follow the
/// surviving cycles: each survivor keeps the label of the free coordinate of
/// the kernel basis vector chosen to represent it.
pub fn turn_page<F: Field>(f: &F, page: &BigradedPage, diff: &DifferentialData<F::Elem>) -> Result<BigradedPage> {
    if diff.r != page.r {
        return Err(Error::ShapeMismatch(format!(
            "page E_{} paired with differential d_{}",
            page.r, diff.r
        )));
    }
    for (src, m) in diff.maps() {
        let tgt = diff.target(src);
        if m.shape() != (page.dim(tgt), page.dim(src)) {
            return Err(Error::ShapeMismatch(format!(
                "d_{} at {src:?} has shape {:?}, page dims are {} -> {}",
                diff.r,
                m.shape(),
                page.dim(src),
                page.dim(tgt)
            )));
        }
        if let Some(next) = diff.get(tgt) {
            if m.rows() > 0 && m.cols() > 0 && !next.mul(f, m).is_zero(f) {
                return Err(Error::NotAComplex(format!("d_{0} ∘ d_{0} ≠ 0 at {src:?}", diff.r)));
            }
        }
    }
    let mut next = BigradedPage::new(page.r + 1);
    let spots: BTreeSet<Spot> = page.spots().map(|(s, _)| s).collect();
    let incoming_source = |spot: Spot| (spot.0 - diff.shift.0, spot.1 - diff.shift.1);
    for spot in spots {
        let dim = page.dim(spot);
        let outgoing = diff.get(spot);
        let incoming = diff.get(incoming_source(spot));
        let rank_out = outgoing.map_or(0, |m| m.rank(f));
        let rank_in = incoming.map_or(0, |m| m.rank(f));
        let new_dim = dim - rank_out - rank_in;
        match page.labels(spot) {
            Some(labels) if labels.len() == dim => {
                let (cycles, free): (Matrix<F::Elem>, Vec<usize>) = match outgoing {
                    Some(m) if m.rows() > 0 => {
                        let k = m.kernel(f);
                        let pivots = m.rref(f).pivots;
                        (k, (0..dim).filter(|c| !pivots.contains(c)).collect())
                    }
                    _ => (Matrix::identity(f, dim), (0..dim).collect()),
                };
                let boundaries = incoming.cloned().unwrap_or_else(|| Matrix::zeros(f, dim, 0));
                let q = Quotient::new(f, &cycles, &boundaries);
                assert_eq!(q.dim(), new_dim, "page bookkeeping failed at {spot:?}");
                for &j in &q.chosen {
                    next.push_class(spot, labels[free[j]].clone());
                }
            }
            _ => next.set_dim(spot, new_dim),
        }
    }
    Ok(next)
}
