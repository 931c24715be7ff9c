//! Free unstable modules `F(n)`, the periodic Bockstein resolution
//!
//! ```text
//! ⋯ →β F(n+1) →β F(n) →β F(n−1) → Σ⁻¹Q
//! ```
//!
//! and Ext charts over unstable modules with trivial-action coefficients.
//!
//! Resolution stage `s` is `P_s = F(n − 1 + s)`; the map out of stage `s ≥ 1`
//! is `P_s → P_{s−1}`, `ι ↦ β ι`. `Σ⁻¹Q` is the cokernel of the map out of
//! stage 1.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::matrix::{contains, Matrix};
use crate::specseq::BigradedPage;
use crate::steenrod::{admissible_basis, beta_right_multiply, AdmissibleWord, Prime};

/// `F(n)`: basis `w·ι_n` with `w` admissible of excess at most `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeUnstableModule {
    pub prime: Prime,
    pub n: u32,
}

impl FreeUnstableModule {
    pub fn new(prime: Prime, n: u32) -> Self {
        FreeUnstableModule { prime, n }
    }

    pub fn basis(&self, degree: i64) -> Vec<AdmissibleWord> {
        free_module_basis(self.prime, self.n, degree)
    }
}

/// Basis of `F(n)` in total degree `degree`; empty below `n`.
pub fn free_module_basis(p: Prime, n: u32, degree: i64) -> Vec<AdmissibleWord> {
    if degree < n as i64 {
        return Vec::new();
    }
    admissible_basis(p, (degree - n as i64) as u32, Some(n))
}

/// A module map in one total degree; rows index the target basis, columns the
/// source basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeMatrix {
    pub source: FreeUnstableModule,
    pub target: FreeUnstableModule,
    pub degree: i64,
    pub source_basis: Vec<AdmissibleWord>,
    pub target_basis: Vec<AdmissibleWord>,
    pub entries: Matrix<u32>,
}

/// `F(n+1) → F(n)`, `ι_{n+1} ↦ β ι_n`, in one total degree.
pub fn beta_resolution_map(p: Prime, n: u32, degree: i64) -> DegreeMatrix {
    let source = FreeUnstableModule::new(p, n + 1);
    let target = FreeUnstableModule::new(p, n);
    let source_basis = source.basis(degree);
    let target_basis = target.basis(degree);
    let mut entries = Matrix::filled(target_basis.len(), source_basis.len(), 0u32);
    for (j, w) in source_basis.iter().enumerate() {
        let image = beta_right_multiply(w).expect("right multiplication by β is always defined");
        for (word, c) in image.terms() {
            // instability: excess above n acts as zero on ι_n
            if word.excess() > n {
                continue;
            }
            let i = target_basis
                .iter()
                .position(|b| b == word)
                .expect("image word lies in the target basis");
            entries[(i, j)] = c;
        }
    }
    DegreeMatrix {
        source,
        target,
        degree,
        source_basis,
        target_basis,
        entries,
    }
}

/// The map out of resolution stage `s ≥ 1`: `F(n − 1 + s) → F(n − 2 + s)`.
pub fn stage_map(p: Prime, n: u32, s: u32, degree: i64) -> DegreeMatrix {
    assert!(s >= 1, "stage 0 has no outgoing resolution map");
    assert!(n + s >= 2, "F(n − 2 + s) needs n − 2 + s ≥ 0");
    beta_resolution_map(p, n + s - 2, degree)
}

/// Ranks at one stage and degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageRanks {
    pub stage: u32,
    pub degree: i64,
    pub dim: usize,
    /// rank of the map out of this stage (stage ≥ 1)
    pub rank_out: usize,
    /// rank of the map into this stage
    pub rank_in: usize,
    pub exact: bool,
}

/// A degree where the cokernel basis and the admissible-word description of
/// `Σ⁻¹Q` differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QDiscrepancy {
    pub degree: i64,
    pub cokernel: Vec<String>,
    pub described: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactnessReport {
    pub prime: u32,
    pub n: u32,
    pub degree_bound: i64,
    pub exact: bool,
    pub ranks: Vec<StageRanks>,
    pub q_discrepancies: Vec<QDiscrepancy>,
}

/// Checks `ker = im` at every stage `s ≥ 1` and total degree up to the bound,
/// and that the cokernel at stage 0 is spanned by the admissible words of
/// excess at most `n − 1` whose rightmost letter is not the Bockstein.
pub fn verify_resolution_exactness(p: Prime, n: u32, degree_bound: i64) -> Result<ExactnessReport> {
    if n < 1 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let f = p.field();
    let mut ranks = Vec::new();
    let mut exact = true;
    let mut q_discrepancies = Vec::new();
    for d in 0..=degree_bound {
        // P_s is zero in degree d once n − 1 + s > d
        let top = d - (n as i64 - 1);
        if top < 0 {
            continue;
        }
        for s in 1..=top as u32 {
            let out = stage_map(p, n, s, d).entries;
            let inc = stage_map(p, n, s + 1, d).entries;
            let composite_zero = out.rows() == 0 || inc.cols() == 0 || out.mul(&f, &inc).is_zero(&f);
            let kernel = out.kernel(&f);
            let rank_out = out.rank(&f);
            let rank_in = inc.rank(&f);
            let ok = composite_zero && kernel.cols() == rank_in && contains(&f, &kernel, &inc);
            exact &= ok;
            ranks.push(StageRanks {
                stage: s,
                degree: d,
                dim: out.cols(),
                rank_out,
                rank_in,
                exact: ok,
            });
        }
        if n >= 2 {
            let into = stage_map(p, n, 1, d);
            let rank_in = into.entries.rank(&f);
            let dim = into.target_basis.len();
            let cokernel = cokernel_words(&f, &into);
            let described = described_q_basis(p, n, d);
            let spans = complement_spans(&f, &into, &described);
            let ok = cokernel == described && spans;
            exact &= ok;
            if !ok {
                q_discrepancies.push(QDiscrepancy {
                    degree: d,
                    cokernel: cokernel.iter().map(|w| w.to_string()).collect(),
                    described: described.iter().map(|w| w.to_string()).collect(),
                });
            }
            ranks.push(StageRanks {
                stage: 0,
                degree: d,
                dim,
                rank_out: dim - rank_in,
                rank_in,
                exact: ok,
            });
        }
    }
    Ok(ExactnessReport {
        prime: p.value(),
        n,
        degree_bound,
        exact,
        ranks,
        q_discrepancies,
    })
}

/// Target basis words not among the pivots of the image.
fn cokernel_words(f: &Fp, m: &DegreeMatrix) -> Vec<AdmissibleWord> {
    let image = m.entries.column_space(f);
    // pivots of the transposed image in row-reduced form are the rows hit
    let pivots = image.transpose().rref(f).pivots;
    m.target_basis
        .iter()
        .enumerate()
        .filter(|(i, _)| !pivots.contains(i))
        .map(|(_, w)| w.clone())
        .collect()
}

fn described_q_basis(p: Prime, n: u32, degree: i64) -> Vec<AdmissibleWord> {
    free_module_basis(p, n - 1, degree)
        .into_iter()
        .filter(|w| !w.ends_with_bockstein())
        .collect()
}

/// Whether `image + span(words)` is everything.
fn complement_spans(f: &Fp, m: &DegreeMatrix, words: &[AdmissibleWord]) -> bool {
    let dim = m.target_basis.len();
    let cols: Vec<Vec<u32>> = words
        .iter()
        .map(|w| {
            let mut v = vec![0; dim];
            v[m.target_basis.iter().position(|b| b == w).expect("word in basis")] = 1;
            v
        })
        .collect();
    let extra = Matrix::from_columns(dim, &cols, 0);
    m.entries.hstack(&extra).rank(f) == dim
}

/// Basis of `Σ⁻¹Q` in one degree, as words applied to `ι_{n−1}`: the
/// cokernel of the stage-1 map.
pub fn q_module_basis(p: Prime, n: u32, degree: i64) -> Result<Vec<AdmissibleWord>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("q_module_basis needs n ≥ 2, got {n}")));
    }
    let f = p.field();
    Ok(cokernel_words(&f, &stage_map(p, n, 1, degree)))
}

/// Coefficients with trivial Steenrod action: a dimension per degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrivialCoefficients {
    dims: BTreeMap<i64, usize>,
}

impl TrivialCoefficients {
    pub fn new(dims: BTreeMap<i64, usize>) -> Self {
        TrivialCoefficients {
            dims: dims.into_iter().filter(|(_, d)| *d > 0).collect(),
        }
    }

    /// `F_p` in degree 0.
    pub fn unit() -> Self {
        Self::new(BTreeMap::from([(0, 1)]))
    }

    pub fn dim(&self, degree: i64) -> usize {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &BTreeMap<i64, usize> {
        &self.dims
    }

    /// `Σ^k M` in degree `d` is `M` in degree `d − k`.
    pub fn suspended_dim(&self, k: i64, degree: i64) -> usize {
        self.dim(degree - k)
    }

    /// Action of a word `M_d → M_{d+|w|}`: identity for the unit word, zero
    /// otherwise.
    fn action(&self, f: &Fp, w: &AdmissibleWord, source_dim: usize, target_dim: usize) -> Matrix<u32> {
        if w.is_unit() {
            assert_eq!(source_dim, target_dim);
            Matrix::identity(f, source_dim)
        } else {
            Matrix::zeros(f, target_dim, source_dim)
        }
    }
}

/// The dual differential `Hom(P_s, N) → Hom(P_{s+1}, N)` with
/// `N = Σ^{t−1} M`. A map out of the free module `P_s = F(m)` is its value on
/// `ι_m`, so `Hom(P_s, N) = N_m`.
pub fn hom_differential(p: Prime, n: u32, coeffs: &TrivialCoefficients, s: u32, t: i64) -> Matrix<u32> {
    let f = p.field();
    let m = n as i64 - 1 + s as i64;
    let shift = t - 1;
    let src_dim = coeffs.suspended_dim(shift, m);
    let tgt_dim = coeffs.suspended_dim(shift, m + 1);
    // β(ι_{m+1}) expanded in F(m) in degree m + 1
    let res = stage_map(p, n, s + 1, m + 1);
    let generator = res
        .source_basis
        .iter()
        .position(|w| w.is_unit())
        .expect("ι_{m+1} is in the basis of F(m+1) in degree m+1");
    let mut delta = Matrix::zeros(&f, tgt_dim, src_dim);
    for (i, w) in res.target_basis.iter().enumerate() {
        let c = res.entries[(i, generator)];
        if c == 0 {
            continue;
        }
        // (f∘β)(ι_{m+1}) = Σ c_w · w·f(ι_m); `w·f(ι_m)` must land in degree m + 1
        let act = if w.degree() as i64 == 1 {
            coeffs.action(&f, w, src_dim, tgt_dim)
        } else {
            Matrix::zeros(&f, tgt_dim, src_dim)
        };
        delta = delta.add(&f, &act.scale(&f, &c));
    }
    delta
}

/// `E_2^{s,t} = Ext^s_UM(Σ⁻¹Q, Σ^{t−1} M)` for `0 ≤ s ≤ s_max`, `0 ≤ t ≤ t_max`,
/// computed from the Hom complex of the periodic resolution.
pub fn ext_chart(p: Prime, n: u32, coeffs: &TrivialCoefficients, s_max: u32, t_max: i64) -> Result<BigradedPage> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!("n must be at least 1, got {n}")));
    }
    let f = p.field();
    let mut page = BigradedPage::new(2);
    for t in 0..=t_max {
        let mut incoming_rank = 0;
        for s in 0..=s_max {
            let delta = hom_differential(p, n, coeffs, s, t);
            let dim = delta.cols();
            let kernel = dim - delta.rank(&f);
            page.set_dim((s as i64, t), kernel - incoming_rank);
            incoming_rank = delta.rank(&f);
        }
    }
    Ok(page)
}
