use serde::Serialize;

use super::double::DoubleCochainComplex;
use super::gamma::{dual_cosimplicial, gamma_map, Layout};
use super::identities::{self, Op};
use super::vector::{alternating_sum, conormal_basis, restrict, CosimplicialVectorSpace};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

/// A bicosimplicial vector space truncated at `(top, top)`, stored as its
/// horizontal rows and vertical columns.
#[derive(Clone, Debug, PartialEq)]
pub struct BicosimplicialVectorSpace<F: Field> {
    field: F,
    rows: Vec<CosimplicialVectorSpace<F>>,
    columns: Vec<CosimplicialVectorSpace<F>>,
}

/// Cohomotopy of the diagonal against cohomology of the total complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EilenbergZilberReport {
    pub agree: bool,
    pub diagonal: Vec<usize>,
    pub total: Vec<usize>,
}

impl<F: Field> BicosimplicialVectorSpace<F> {
    /// Rows and columns are already cosimplicial; checks sizes and that the two
    /// directions commute.
    pub fn new(rows: Vec<CosimplicialVectorSpace<F>>, columns: Vec<CosimplicialVectorSpace<F>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || columns.len() != n {
            return Err(Error::ShapeMismatch("need equally many rows and columns".into()));
        }
        for a in 0..n {
            for b in 0..n {
                if rows[b].top() != n - 1 || columns[a].top() != n - 1 {
                    return Err(Error::ShapeMismatch("rows and columns must share the truncation".into()));
                }
                if rows[b].dim(a) != columns[a].dim(b) {
                    return Err(Error::ShapeMismatch(format!("rows and columns disagree on X^({a},{b})")));
                }
            }
        }
        let field = rows[0].field().clone();
        let x = BicosimplicialVectorSpace { field, rows, columns };
        let f = &x.field;
        identities::check_commuting(
            "bicosimplicial vector space",
            x.top(),
            |b, a, op| apply(&x.rows[b], a, op).clone(),
            |a, b, op| apply(&x.columns[a], b, op).clone(),
            |p, q| p.mul(f, q),
        )?;
        Ok(x)
    }

    pub fn constant(field: F, dim: usize, top: usize) -> Self {
        let c = CosimplicialVectorSpace::constant(field.clone(), dim, top);
        BicosimplicialVectorSpace {
            field,
            rows: vec![c.clone(); top + 1],
            columns: vec![c; top + 1],
        }
    }

    /// `X^{a,b} = C^a ⊗ D^b`.
    pub fn external_product(c: &CosimplicialVectorSpace<F>, d: &CosimplicialVectorSpace<F>) -> Result<Self> {
        if c.top() != d.top() {
            return Err(Error::ShapeMismatch("external product of different truncations".into()));
        }
        let f = c.field();
        let top = c.top();
        let rows = (0..=top)
            .map(|b| c.tensor(&CosimplicialVectorSpace::constant(f.clone(), d.dim(b), top)))
            .collect::<Result<Vec<_>>>()?;
        let columns = (0..=top)
            .map(|a| CosimplicialVectorSpace::constant(f.clone(), c.dim(a), top).tensor(d))
            .collect::<Result<Vec<_>>>()?;
        BicosimplicialVectorSpace::new(rows, columns)
    }

    /// Two-variable inverse Dold–Kan: the bicosimplicial object whose
    /// binormalization is `d`.
    pub fn from_double_complex(d: &DoubleCochainComplex<F>, top: usize) -> Self {
        let f = d.field();
        let (w, h) = (d.width(), d.height());
        // the vertical Γ of column k, as a graded family over l
        let col_dim = |k: usize| move |l: usize| d.dim(k, l);
        let v_layout = |k: usize, b: usize| Layout::new(b, h, &col_dim(k));
        let v_dim = |k: usize, b: usize| v_layout(k, b).dim;
        let h_layout = |a: usize, b: usize| Layout::new(a, w, &|k| v_dim(k, b));
        let vertical_gamma = |k: usize, theta: &[usize], n: usize| {
            gamma_map(f, theta, n, h, &col_dim(k), &|l| d.vertical(k, l - 1).transpose())
        };
        let horizontal_boundary = |b: usize, k: usize| {
            let blocks: Vec<Matrix<F::Elem>> = v_layout(k, b)
                .blocks
                .iter()
                .map(|(l, _, _)| d.horizontal(k - 1, *l).transpose())
                .collect();
            Matrix::block_diagonal(f, &blocks)
        };
        let rows = (0..=top)
            .map(|b| {
                let dims = (0..=top).map(|a| h_layout(a, b).dim).collect();
                dual_cosimplicial(f, dims, |theta, n| {
                    gamma_map(f, theta, n, w, &|k| v_dim(k, b), &|k| horizontal_boundary(b, k))
                })
            })
            .collect();
        let columns = (0..=top)
            .map(|a| {
                let dims = (0..=top).map(|b| h_layout(a, b).dim).collect();
                let layout = Layout::new(a, w, &|_| 0);
                dual_cosimplicial(f, dims, |theta, n| {
                    let blocks: Vec<Matrix<F::Elem>> =
                        layout.blocks.iter().map(|(k, _, _)| vertical_gamma(*k, theta, n)).collect();
                    Matrix::block_diagonal(f, &blocks)
                })
            })
            .collect();
        BicosimplicialVectorSpace::new(rows, columns).expect("inverse Dold-Kan image is bicosimplicial")
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.top() != other.top() {
            return Err(Error::ShapeMismatch("direct sum of different truncations".into()));
        }
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| a.direct_sum(b)).collect::<Result<_>>()?;
        let columns = self.columns.iter().zip(&other.columns).map(|(a, b)| a.direct_sum(b)).collect::<Result<_>>()?;
        BicosimplicialVectorSpace::new(rows, columns)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn top(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn dim(&self, a: usize, b: usize) -> usize {
        self.rows[b].dim(a)
    }

    pub fn row(&self, b: usize) -> &CosimplicialVectorSpace<F> {
        &self.rows[b]
    }

    pub fn column(&self, a: usize) -> &CosimplicialVectorSpace<F> {
        &self.columns[a]
    }

    /// Level `s` is `X^{s,s}`, `d^i = d^i_h d^i_v`, `s^i = s^i_h s^i_v`.
    pub fn diagonal(&self) -> CosimplicialVectorSpace<F> {
        let f = &self.field;
        let top = self.top();
        let dims = (0..=top).map(|s| self.dim(s, s)).collect();
        let cofaces = (0..top)
            .map(|s| {
                (0..=s + 1)
                    .map(|i| self.rows[s + 1].coface(s, i).mul(f, self.columns[s].coface(s, i)))
                    .collect()
            })
            .collect();
        let codegeneracies = (0..=top)
            .map(|s| {
                (0..s)
                    .map(|i| self.rows[s - 1].codegeneracy(s, i).mul(f, self.columns[s].codegeneracy(s, i)))
                    .collect()
            })
            .collect();
        CosimplicialVectorSpace::new(f.clone(), dims, cofaces, codegeneracies).expect("diagonal is cosimplicial")
    }

    /// Conormalization in both directions.
    pub fn binormalize(&self) -> DoubleCochainComplex<F> {
        let f = &self.field;
        let top = self.top();
        let basis: Vec<Vec<Matrix<F::Elem>>> = (0..=top)
            .map(|a| {
                (0..=top)
                    .map(|b| {
                        let mut codegs: Vec<Matrix<F::Elem>> =
                            (0..a).map(|i| self.rows[b].codegeneracy(a, i).clone()).collect();
                        codegs.extend((0..b).map(|j| self.columns[a].codegeneracy(b, j).clone()));
                        conormal_basis(f, self.dim(a, b), &codegs)
                    })
                    .collect()
            })
            .collect();
        let dims = basis.iter().map(|c| c.iter().map(Matrix::cols).collect()).collect();
        let horizontal = (0..top)
            .map(|a| {
                (0..=top)
                    .map(|b| {
                        let cofaces: Vec<_> = (0..=a + 1).map(|i| self.rows[b].coface(a, i).clone()).collect();
                        restrict(f, &alternating_sum(f, &cofaces), &basis[a][b], &basis[a + 1][b])
                    })
                    .collect()
            })
            .collect();
        let vertical = (0..=top)
            .map(|a| {
                (0..top)
                    .map(|b| {
                        let cofaces: Vec<_> = (0..=b + 1).map(|j| self.columns[a].coface(b, j).clone()).collect();
                        restrict(f, &alternating_sum(f, &cofaces), &basis[a][b], &basis[a][b + 1])
                    })
                    .collect()
            })
            .collect();
        DoubleCochainComplex::new(f.clone(), dims, horizontal, vertical).expect("binormalization is a double complex")
    }

    /// Compares `π^s` of the diagonal with `H^s` of the total complex of the
    /// binormalization for `s ≤ s_max`.
    pub fn eilenberg_zilber_check(&self, s_max: usize) -> Result<EilenbergZilberReport> {
        if s_max >= self.top() {
            return Err(Error::OutOfRange(format!(
                "degree {s_max} is not reliable at truncation {}",
                self.top()
            )));
        }
        let diagonal = self.diagonal().cohomotopy_dims()[..=s_max].to_vec();
        let total = self.binormalize().total_cohomology()[..=s_max].to_vec();
        Ok(EilenbergZilberReport {
            agree: diagonal == total,
            diagonal,
            total,
        })
    }
}

fn apply<F: Field>(c: &CosimplicialVectorSpace<F>, s: usize, op: Op) -> &Matrix<F::Elem> {
    match op {
        Op::Coface(i) => c.coface(s, i),
        Op::Codegeneracy(i) => c.codegeneracy(s, i),
    }
}

/// Künneth for the external product: `H^n(C ⊗ D) = ⊕_{a+b=n} H^a(C) ⊗ H^b(D)`.
pub fn kunneth(c: &[usize], d: &[usize], n_max: usize) -> Vec<usize> {
    (0..=n_max)
        .map(|n| {
            (0..=n)
                .map(|a| c.get(a).copied().unwrap_or(0) * d.get(n - a).copied().unwrap_or(0))
                .sum()
        })
        .collect()
}
