use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

/// A finite cochain complex `C^0 → C^1 → ⋯ → C^top`, zero above `top`.
#[derive(Clone, Debug, PartialEq)]
pub struct CochainComplex<F: Field> {
    field: F,
    dims: Vec<usize>,
    /// `diffs[s]: C^s → C^{s+1}`, shape `(dims[s+1], dims[s])`.
    diffs: Vec<Matrix<F::Elem>>,
}

impl<F: Field> CochainComplex<F> {
    pub fn new(field: F, dims: Vec<usize>, diffs: Vec<Matrix<F::Elem>>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidArgument("a cochain complex needs at least one level".into()));
        }
        if diffs.len() + 1 != dims.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} levels need {} differentials, got {}",
                dims.len(),
                dims.len() - 1,
                diffs.len()
            )));
        }
        for (s, d) in diffs.iter().enumerate() {
            if d.shape() != (dims[s + 1], dims[s]) {
                return Err(Error::ShapeMismatch(format!(
                    "d^{s} has shape {:?}, expected {:?}",
                    d.shape(),
                    (dims[s + 1], dims[s])
                )));
            }
        }
        for s in 1..diffs.len() {
            if !diffs[s].mul(&field, &diffs[s - 1]).is_zero(&field) {
                return Err(Error::NotAComplex(format!("d^{s} ∘ d^{} ≠ 0", s - 1)));
            }
        }
        Ok(CochainComplex { field, dims, diffs })
    }

    pub fn zero(field: F) -> Self {
        CochainComplex {
            field,
            dims: vec![0],
            diffs: Vec::new(),
        }
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
        self.dims.get(s).copied().unwrap_or(0)
    }

    /// The differential out of `C^s`; a zero map at the top.
    pub fn differential(&self, s: usize) -> Matrix<F::Elem> {
        match self.diffs.get(s) {
            Some(d) => d.clone(),
            None => Matrix::zeros(&self.field, self.dim(s + 1), self.dim(s)),
        }
    }

    pub fn cohomology_dim(&self, s: usize) -> usize {
        let out = self.diffs.get(s).map_or(0, |d| d.rank(&self.field));
        let inc = if s == 0 {
            0
        } else {
            self.diffs.get(s - 1).map_or(0, |d| d.rank(&self.field))
        };
        self.dim(s) - out - inc
    }

    pub fn cohomology_dims(&self) -> Vec<usize> {
        (0..=self.top()).map(|s| self.cohomology_dim(s)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    #[test]
    fn rejects_non_complex() {
        let f = Fp::new(2).unwrap();
        let one = Matrix::from_rows(vec![vec![1]], 1);
        assert!(matches!(
            CochainComplex::new(f, vec![1, 1, 1], vec![one.clone(), one.clone()]),
            Err(Error::NotAComplex(_))
        ));
        let c = CochainComplex::new(f, vec![1, 1, 1], vec![one, Matrix::zeros(&f, 1, 1)]).unwrap();
        assert_eq!(c.cohomology_dims(), vec![0, 0, 1]);
    }
}
