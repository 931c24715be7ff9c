//! The inverse Dold–Kan functor `Γ`, on graded families with a boundary.
//!
//! `Γ_n = ⊕_{σ: [n] ↠ [k]} W_k`. A monotone `θ: [m] → [n]` sends the summand
//! `(σ, w)` to `(ε, η^* w)` where `σθ = ηε` is the epi-mono factorization and
//! `η^*` is the identity for `η = id`, the boundary for the last coface and
//! zero otherwise. Cosimplicial objects are obtained by transposing.

use std::collections::HashMap;

use super::delta::{codegeneracy, coface, compose, epi_mono, surjections};
use super::vector::CosimplicialVectorSpace;
use crate::field::Field;
use crate::matrix::Matrix;

pub(crate) struct Layout {
    /// `(k, σ, offset)`
    pub blocks: Vec<(usize, Vec<usize>, usize)>,
    index: HashMap<Vec<usize>, usize>,
    pub dim: usize,
}

impl Layout {
    pub fn new(n: usize, top: usize, block_dim: &dyn Fn(usize) -> usize) -> Self {
        let mut blocks = Vec::new();
        let mut index = HashMap::new();
        let mut dim = 0;
        for k in 0..=n.min(top) {
            for sigma in surjections(n, k) {
                index.insert(sigma.clone(), dim);
                blocks.push((k, sigma, dim));
                dim += block_dim(k);
            }
        }
        Layout { blocks, index, dim }
    }

    pub fn offset(&self, sigma: &[usize]) -> Option<usize> {
        self.index.get(sigma).copied()
    }
}

/// `θ^*: Γ_n → Γ_m` for `θ: [m] → [n]`.
pub(crate) fn gamma_map<F: Field>(
    f: &F,
    theta: &[usize],
    n: usize,
    top: usize,
    block_dim: &dyn Fn(usize) -> usize,
    boundary: &dyn Fn(usize) -> Matrix<F::Elem>,
) -> Matrix<F::Elem> {
    let m = theta.len() - 1;
    let source = Layout::new(n, top, block_dim);
    let target = Layout::new(m, top, block_dim);
    let mut out = Matrix::zeros(f, target.dim, source.dim);
    for (k, sigma, c0) in &source.blocks {
        let (epi, image) = epi_mono(&compose(sigma, theta));
        let j = image.len() - 1;
        let Some(r0) = target.offset(&epi) else {
            continue;
        };
        let identity_image = image.iter().enumerate().all(|(a, &b)| a == b);
        let block = if j == *k {
            Matrix::identity(f, block_dim(*k))
        } else if j + 1 == *k && identity_image {
            boundary(*k)
        } else {
            continue;
        };
        for r in 0..block.rows() {
            for c in 0..block.cols() {
                out[(r0 + r, c0 + c)] = block[(r, c)].clone();
            }
        }
    }
    out
}

/// Dualizes a simplicial object given by `gamma(θ, n): Γ_n → Γ_m` into a
/// validated cosimplicial vector space with levels `0..=top`.
pub(crate) fn dual_cosimplicial<F: Field>(
    f: &F,
    dims: Vec<usize>,
    gamma: impl Fn(&[usize], usize) -> Matrix<F::Elem>,
) -> CosimplicialVectorSpace<F> {
    let top = dims.len() - 1;
    let cofaces = (0..top)
        .map(|s| (0..=s + 1).map(|i| gamma(&coface(s + 1, i), s + 1).transpose()).collect())
        .collect();
    let codegeneracies = (0..=top)
        .map(|s| (0..s).map(|i| gamma(&codegeneracy(s - 1, i), s - 1).transpose()).collect())
        .collect();
    CosimplicialVectorSpace::new(f.clone(), dims, cofaces, codegeneracies).expect("dual of Γ is cosimplicial")
}
