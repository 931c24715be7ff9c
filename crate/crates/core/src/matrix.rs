//! Dense matrices over a [`Field`] and the handful of exact linear-algebra
//! routines the engines need: row reduction, rank, kernels, images,
//! intersections and solving.
//!
//! Subspaces of `F^n` are passed around as matrices whose columns span them.

use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<E>>, cols: usize) -> Self {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        Matrix {
            rows: nrows,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Matrix whose columns are the given vectors, all of length `len`.
    pub fn from_columns(len: usize, columns: &[Vec<E>], fill: E) -> Self {
        let mut m = Matrix::filled(len, columns.len(), fill);
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), len, "column length mismatch");
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        Matrix::from_fn(self.rows, idx.len(), |i, j| self[(i, idx[j])].clone())
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }
}

impl<E> Index<(usize, usize)> for Matrix<E> {
    type Output = E;
    fn index(&self, (i, j): (usize, usize)) -> &E {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.data[i * self.cols + j]
    }
}

impl<E> IndexMut<(usize, usize)> for Matrix<E> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut E {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.data[i * self.cols + j]
    }
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref<E> {
    pub matrix: Matrix<E>,
    pub pivots: Vec<usize>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> Matrix<E> {
    pub fn zeros<F: Field<Elem = E>>(f: &F, rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, f.zero())
    }

    pub fn identity<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { f.one() } else { f.zero() })
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.data.iter().all(|x| f.is_zero(x))
    }

    /// `self * other`; panics on incompatible shapes.
    pub fn mul<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "cannot multiply {}x{} by {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !f.is_zero(b) {
                        out[(i, j)] = f.add(&out[(i, j)], &f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn apply<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols, v.len(), "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        acc = f.add(&acc, &f.mul(a, b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape(), "cannot add matrices of different shapes");
        Matrix::from_fn(self.rows, self.cols, |i, j| f.add(&self[(i, j)], &other[(i, j)]))
    }

    pub fn sub<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape(), "cannot subtract matrices of different shapes");
        Matrix::from_fn(self.rows, self.cols, |i, j| f.sub(&self[(i, j)], &other[(i, j)]))
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, c: &E) -> Self {
        Matrix::from_fn(self.rows, self.cols, |i, j| f.mul(c, &self[(i, j)]))
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        Matrix::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            f.mul(
                &self[(i / other.rows, j / other.cols)],
                &other[(i % other.rows, j % other.cols)],
            )
        })
    }

    pub fn block_diagonal<F: Field<Elem = E>>(f: &F, blocks: &[Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(f, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn rref<F: Field<Elem = E>>(&self, f: &F) -> Rref<E> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !f.is_zero(&m[(i, c)])) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(&m[(r, c)]);
            for j in c..m.cols {
                m[(r, j)] = f.mul(&inv, &m[(r, j)]);
            }
            for i in 0..m.rows {
                if i == r || f.is_zero(&m[(i, c)]) {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..m.cols {
                    let t = f.mul(&factor, &m[(r, j)]);
                    m[(i, j)] = f.sub(&m[(i, j)], &t);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank<F: Field<Elem = E>>(&self, f: &F) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.rref(f).pivots.len()
    }

    /// Basis of the null space, as the columns of a `cols x nullity` matrix.
    pub fn kernel<F: Field<Elem = E>>(&self, f: &F) -> Self {
        let Rref { matrix, pivots } = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(f, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k[(fc, j)] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                k[(pc, j)] = f.neg(&matrix[(r, fc)]);
            }
        }
        k
    }

    /// A basis of the column space, as columns in reduced form.
    pub fn column_space<F: Field<Elem = E>>(&self, f: &F) -> Self {
        let Rref { matrix, pivots } = self.transpose().rref(f);
        Matrix::from_fn(self.rows, pivots.len(), |i, j| matrix[(j, i)].clone())
    }

    /// Solve `self * x = b`, if solvable.
    pub fn solve<F: Field<Elem = E>>(&self, f: &F, b: &[E]) -> Option<Vec<E>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let aug = self.hstack(&Matrix::from_columns(self.rows, &[b.to_vec()], f.zero()));
        let Rref { matrix, pivots } = aug.rref(f);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = matrix[(r, self.cols)].clone();
        }
        Some(x)
    }
}

/// Dimension of the span of the columns of `a`.
pub fn span_dim<F: Field>(f: &F, a: &Matrix<F::Elem>) -> usize {
    a.rank(f)
}

/// Basis (columns) of `col(a) ∩ col(b)`; both live in the same ambient space.
pub fn intersect<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.rows(), b.rows(), "ambient dimension mismatch");
    let a = a.column_space(f);
    let b = b.column_space(f);
    let stacked = a.hstack(&b.scale(f, &f.neg(&f.one())));
    let k = stacked.kernel(f);
    let top = Matrix::from_fn(a.cols(), k.cols(), |i, j| k[(i, j)].clone());
    a.mul(f, &top).column_space(f)
}

/// Basis (columns) of `col(a) + col(b)`.
pub fn sum<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    a.hstack(b).column_space(f)
}

/// Whether `col(small) ⊆ col(big)`.
pub fn contains<F: Field>(f: &F, big: &Matrix<F::Elem>, small: &Matrix<F::Elem>) -> bool {
    big.rank(f) == big.hstack(small).rank(f)
}

/// Coordinates in `F^n / col(sub)` for vectors of `col(space)`.
///
/// Picks a complement of `col(sub)` inside `col(space)` spanned by columns of
/// `space` (greedily, left to right), and projects along `col(sub)`.
#[derive(Clone, Debug)]
pub struct Quotient<F: Field> {
    field: F,
    /// `[sub basis | complement basis]`
    frame: Matrix<F::Elem>,
    sub_dim: usize,
    /// Indices of the columns of `space` used as the complement.
    pub chosen: Vec<usize>,
}

impl<F: Field> Quotient<F> {
    pub fn new(f: &F, space: &Matrix<F::Elem>, sub: &Matrix<F::Elem>) -> Self {
        assert_eq!(space.rows(), sub.rows(), "ambient dimension mismatch");
        let sub = sub.column_space(f);
        let sub_dim = sub.cols();
        let mut frame = sub;
        let mut chosen = Vec::new();
        let mut rank = sub_dim;
        for j in 0..space.cols() {
            let cand = frame.hstack(&space.select_columns(&[j]));
            let r = cand.rank(f);
            if r > rank {
                frame = cand;
                chosen.push(j);
                rank = r;
            }
        }
        Quotient {
            field: f.clone(),
            frame,
            sub_dim,
            chosen,
        }
    }

    pub fn dim(&self) -> usize {
        self.frame.cols() - self.sub_dim
    }

    /// Coordinates of `v` in the complement; `None` if `v` is outside `space + sub`.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let x = self.frame.solve(&self.field, v)?;
        Some(x[self.sub_dim..].to_vec())
    }

    /// The complement basis vectors, as columns.
    pub fn complement(&self) -> Matrix<F::Elem> {
        let idx: Vec<usize> = (self.sub_dim..self.frame.cols()).collect();
        self.frame.select_columns(&idx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rationals};

    fn m(f: &Fp, rows: &[&[i64]]) -> Matrix<u32> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| f.from_i64(x)).collect())
                .collect(),
            cols,
        )
    }

    #[test]
    fn rank_and_kernel_mod_3() {
        let f = Fp::new(3).unwrap();
        let a = m(&f, &[&[1, 2, 0], &[2, 1, 0], &[0, 0, 1]]);
        // rows 1 and 2 are dependent mod 3
        assert_eq!(a.rank(&f), 2);
        let k = a.kernel(&f);
        assert_eq!(k.cols(), 1);
        assert!(a.mul(&f, &k).is_zero(&f));
    }

    #[test]
    fn rank_depends_on_characteristic() {
        let a2 = Fp::new(2).unwrap();
        let a = m(&a2, &[&[1, 1], &[1, -1]]);
        assert_eq!(a.rank(&a2), 1);
        let q = Rationals;
        let b: Matrix<_> = Matrix::from_fn(2, 2, |i, j| q.from_i64(if i == 1 && j == 1 { -1 } else { 1 }));
        assert_eq!(b.rank(&q), 2);
    }

    #[test]
    fn intersection_and_quotient() {
        let f = Fp::new(5).unwrap();
        let a = m(&f, &[&[1, 0], &[0, 1], &[0, 0]]);
        let b = m(&f, &[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(intersect(&f, &a, &b).cols(), 1);
        assert_eq!(sum(&f, &a, &b).cols(), 3);
        let q = Quotient::new(&f, &a, &intersect(&f, &a, &b));
        assert_eq!(q.dim(), 1);
        assert_eq!(q.coordinates(&[2, 3, 0]), Some(vec![2]));
        assert_eq!(q.coordinates(&[0, 0, 1]), None);
    }

    #[test]
    fn solve_and_empty_shapes() {
        let f = Fp::new(7).unwrap();
        let a = m(&f, &[&[1, 1], &[0, 1]]);
        let x = a.solve(&f, &[3, 1]).unwrap();
        assert_eq!(a.apply(&f, &x), vec![3, 1]);
        let empty: Matrix<u32> = Matrix::zeros(&f, 0, 3);
        assert_eq!(empty.rank(&f), 0);
        assert_eq!(empty.kernel(&f).cols(), 3);
    }
}
