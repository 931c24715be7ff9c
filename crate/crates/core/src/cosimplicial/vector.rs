use super::complex::CochainComplex;
use super::gamma::{dual_cosimplicial, gamma_map, Layout};
use super::identities;
use super::sets::FiniteCosimplicialSet;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

/// A cosimplicial vector space truncated at level `top`.
///
/// Every constructor validates all cosimplicial identities among the stored
/// matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct CosimplicialVectorSpace<F: Field> {
    field: F,
    dims: Vec<usize>,
    /// `cofaces[s][i] = d^i: X^s → X^{s+1}` for `s < top`, `0 ≤ i ≤ s + 1`.
    cofaces: Vec<Vec<Matrix<F::Elem>>>,
    /// `codegeneracies[s][i] = s^i: X^s → X^{s−1}` for `0 ≤ i < s`.
    codegeneracies: Vec<Vec<Matrix<F::Elem>>>,
}

impl<F: Field> CosimplicialVectorSpace<F> {
    pub fn new(
        field: F,
        dims: Vec<usize>,
        cofaces: Vec<Vec<Matrix<F::Elem>>>,
        codegeneracies: Vec<Vec<Matrix<F::Elem>>>,
    ) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidArgument("at least one level is required".into()));
        }
        let top = dims.len() - 1;
        if cofaces.len() != top || codegeneracies.len() != top + 1 {
            return Err(Error::ShapeMismatch(format!(
                "{} levels need {top} coface lists and {} codegeneracy lists",
                top + 1,
                top + 1
            )));
        }
        for (s, maps) in cofaces.iter().enumerate() {
            if maps.len() != s + 2 {
                return Err(Error::ShapeMismatch(format!("level {s} needs {} cofaces", s + 2)));
            }
            for (i, m) in maps.iter().enumerate() {
                if m.shape() != (dims[s + 1], dims[s]) {
                    return Err(Error::ShapeMismatch(format!("d^{i} out of level {s} has shape {:?}", m.shape())));
                }
            }
        }
        for (s, maps) in codegeneracies.iter().enumerate() {
            if maps.len() != s {
                return Err(Error::ShapeMismatch(format!("level {s} needs {s} codegeneracies")));
            }
            for (i, m) in maps.iter().enumerate() {
                if m.shape() != (dims[s - 1], dims[s]) {
                    return Err(Error::ShapeMismatch(format!("s^{i} out of level {s} has shape {:?}", m.shape())));
                }
            }
        }
        let c = CosimplicialVectorSpace {
            field,
            dims,
            cofaces,
            codegeneracies,
        };
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<()> {
        let f = &self.field;
        identities::check(
            "cosimplicial vector space",
            self.top(),
            |s, i| self.cofaces[s][i].clone(),
            |s, i| self.codegeneracies[s][i].clone(),
            |a, b| a.mul(f, b),
            |s| Matrix::identity(f, self.dims[s]),
        )
    }

    /// The constant object at `F^dim`: every structure map is the identity.
    pub fn constant(field: F, dim: usize, top: usize) -> Self {
        let id = Matrix::identity(&field, dim);
        let c = CosimplicialVectorSpace {
            dims: vec![dim; top + 1],
            cofaces: (0..top).map(|s| vec![id.clone(); s + 2]).collect(),
            codegeneracies: (0..=top).map(|s| vec![id.clone(); s]).collect(),
            field,
        };
        c.validate().expect("constant object is cosimplicial");
        c
    }

    /// Inverse Dold–Kan: the cosimplicial object whose conormalization is `c`.
    ///
    /// Built as the dual of `Γ` applied to the dual chain complex.
    pub fn from_cochain_complex(c: &CochainComplex<F>, top: usize) -> Self {
        let f = c.field();
        let block_dim = |k: usize| c.dim(k);
        let boundary = |k: usize| c.differential(k - 1).transpose();
        let dims = (0..=top).map(|n| Layout::new(n, c.top(), &block_dim).dim).collect();
        dual_cosimplicial(f, dims, |theta, n| gamma_map(f, theta, n, c.top(), &block_dim, &boundary))
    }

    /// The free vector space on a finite cosimplicial set.
    pub fn linearize(field: F, x: &FiniteCosimplicialSet) -> Self {
        let lin = |src: usize, tgt: usize, map: &[usize]| {
            let mut m = Matrix::zeros(&field, tgt, src);
            for (a, &b) in map.iter().enumerate() {
                m[(b, a)] = field.one();
            }
            m
        };
        let top = x.top();
        let dims: Vec<usize> = (0..=top).map(|s| x.size(s)).collect();
        let cofaces = (0..top)
            .map(|s| (0..=s + 1).map(|i| lin(dims[s], dims[s + 1], x.coface(s, i))).collect())
            .collect();
        let codegeneracies = (0..=top)
            .map(|s| (0..s).map(|i| lin(dims[s], dims[s - 1], x.codegeneracy(s, i))).collect())
            .collect();
        CosimplicialVectorSpace::new(field, dims, cofaces, codegeneracies).expect("linearization is cosimplicial")
    }

    /// Levelwise direct sum.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.top() != other.top() {
            return Err(Error::ShapeMismatch("direct sum of different truncations".into()));
        }
        let f = &self.field;
        let bd = |a: &Matrix<F::Elem>, b: &Matrix<F::Elem>| Matrix::block_diagonal(f, &[a.clone(), b.clone()]);
        Ok(CosimplicialVectorSpace {
            field: f.clone(),
            dims: self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect(),
            cofaces: zip_maps(&self.cofaces, &other.cofaces, bd),
            codegeneracies: zip_maps(&self.codegeneracies, &other.codegeneracies, bd),
        })
    }

    /// Levelwise tensor product, the diagonal of the external product.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.top() != other.top() {
            return Err(Error::ShapeMismatch("tensor product of different truncations".into()));
        }
        let f = &self.field;
        let kr = |a: &Matrix<F::Elem>, b: &Matrix<F::Elem>| a.kron(f, b);
        Ok(CosimplicialVectorSpace {
            field: f.clone(),
            dims: self.dims.iter().zip(&other.dims).map(|(a, b)| a * b).collect(),
            cofaces: zip_maps(&self.cofaces, &other.cofaces, kr),
            codegeneracies: zip_maps(&self.codegeneracies, &other.codegeneracies, kr),
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, s: usize) -> usize {
        self.dims[s]
    }

    pub fn coface(&self, s: usize, i: usize) -> &Matrix<F::Elem> {
        &self.cofaces[s][i]
    }

    pub fn codegeneracy(&self, s: usize, i: usize) -> &Matrix<F::Elem> {
        &self.codegeneracies[s][i]
    }

    /// Basis (columns) of `N^s = ∩_{i < s} ker s^i`.
    pub fn conormal_basis(&self, s: usize) -> Matrix<F::Elem> {
        conormal_basis(&self.field, self.dims[s], &self.codegeneracies[s])
    }

    /// The alternating coface sum `X^s → X^{s+1}`.
    pub fn alternating_coface(&self, s: usize) -> Matrix<F::Elem> {
        alternating_sum(&self.field, &self.cofaces[s])
    }

    /// The conormalized cochain complex, levels `0..=top`. Cohomology in the
    /// top level is not trustworthy.
    pub fn conormalize(&self) -> CochainComplex<F> {
        let f = &self.field;
        let bases: Vec<Matrix<F::Elem>> = (0..=self.top()).map(|s| self.conormal_basis(s)).collect();
        let diffs = (0..self.top())
            .map(|s| restrict(f, &self.alternating_coface(s), &bases[s], &bases[s + 1]))
            .collect();
        CochainComplex::new(f.clone(), bases.iter().map(|b| b.cols()).collect(), diffs)
            .expect("conormalized differential squares to zero")
    }

    /// `π^s`, for `s < top`.
    pub fn cohomotopy(&self, s: usize) -> Result<usize> {
        if s >= self.top() {
            return Err(Error::OutOfRange(format!(
                "cohomotopy in degree {s} needs truncation above {s}, have {}",
                self.top()
            )));
        }
        Ok(self.conormalize().cohomology_dim(s))
    }

    /// `π^s` for every `s < top`.
    pub fn cohomotopy_dims(&self) -> Vec<usize> {
        let c = self.conormalize();
        (0..self.top()).map(|s| c.cohomology_dim(s)).collect()
    }

    /// Basis of `{x : d^0 x = d^1 x}` in level 0.
    pub fn pi0_equalizer(&self) -> Result<Matrix<F::Elem>> {
        if self.top() == 0 {
            return Err(Error::OutOfRange("the equalizer needs level 1".into()));
        }
        let f = &self.field;
        let eq = self.cofaces[0][0].sub(f, &self.cofaces[0][1]).kernel(f);
        assert_eq!(eq.cols(), self.conormalize().cohomology_dim(0), "π^0 differs from H^0 of the conormalization");
        Ok(eq)
    }
}

pub(crate) fn zip_maps<E: Clone>(
    a: &[Vec<Matrix<E>>],
    b: &[Vec<Matrix<E>>],
    op: impl Fn(&Matrix<E>, &Matrix<E>) -> Matrix<E>,
) -> Vec<Vec<Matrix<E>>> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(p, q)| op(p, q)).collect())
        .collect()
}

pub(crate) fn alternating_sum<F: Field>(f: &F, maps: &[Matrix<F::Elem>]) -> Matrix<F::Elem> {
    let mut acc = Matrix::zeros(f, maps[0].rows(), maps[0].cols());
    for (i, m) in maps.iter().enumerate() {
        acc = acc.add(f, &m.scale(f, &f.sign(i % 2 == 1)));
    }
    acc
}

pub(crate) fn conormal_basis<F: Field>(f: &F, dim: usize, codegeneracies: &[Matrix<F::Elem>]) -> Matrix<F::Elem> {
    if codegeneracies.is_empty() {
        return Matrix::identity(f, dim);
    }
    let mut stacked = codegeneracies[0].clone();
    for m in &codegeneracies[1..] {
        stacked = stacked.vstack(m);
    }
    stacked.kernel(f)
}

/// The matrix of `map` restricted to `col(source)` and landing in `col(target)`.
pub(crate) fn restrict<F: Field>(
    f: &F,
    map: &Matrix<F::Elem>,
    source: &Matrix<F::Elem>,
    target: &Matrix<F::Elem>,
) -> Matrix<F::Elem> {
    let image = map.mul(f, source);
    let cols: Vec<Vec<F::Elem>> = (0..image.cols())
        .map(|j| {
            target
                .solve(f, &image.column(j))
                .expect("map preserves the chosen subspaces")
        })
        .collect();
    Matrix::from_columns(target.cols(), &cols, f.zero())
}
