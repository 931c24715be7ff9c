//! Integer matrices: Smith normal form and integral homology of chain complexes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Nonzero invariant factors `d_1 | d_2 | ... | d_r` (all positive) of an
/// integer matrix.
pub fn smith_invariants(a: &Matrix<i64>) -> Vec<i64> {
    let (rows, cols) = a.shape();
    let mut m: Vec<Vec<i128>> = (0..rows)
        .map(|i| a.row(i).iter().map(|&x| x as i128).collect())
        .collect();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in m.iter().enumerate().skip(t) {
            for (j, &x) in row.iter().enumerate().skip(t) {
                if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let piv = m[t][t];
            let mut dirty = false;
            for i in t + 1..rows {
                let q = m[i][t].div_euclid(piv);
                if q != 0 {
                    for j in t..cols {
                        m[i][j] -= q * m[t][j];
                    }
                }
                if m[i][t] != 0 {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                let q = m[t][j].div_euclid(piv);
                if q != 0 {
                    for row in m.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                if m[t][j] != 0 {
                    dirty = true;
                }
            }
            if !dirty {
                // divisibility: fold a non-divisible entry into the pivot row
                let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| m[i][j] % piv != 0));
                match bad {
                    None => break,
                    Some(i) => {
                        for j in t..cols {
                            m[t][j] += m[i][j];
                        }
                    }
                }
            }
            // move the smallest nonzero entry of row/column t to the pivot
            let mut best = (t, t);
            for i in t..rows {
                if m[i][t] != 0 && m[i][t].abs() < m[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if m[t][j] != 0 && m[t][j].abs() < m[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            m.swap(t, best.0);
            for row in m.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(i64::try_from(m[t][t].abs()).expect("invariant factor overflow"));
        t += 1;
    }
    diag
}

/// One cyclic summand: `Z` or `Z/m` with `m ≥ 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Cyclic {
    Free,
    Torsion(u64),
}

impl Cyclic {
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Z" {
            return Ok(Cyclic::Free);
        }
        let m = s
            .strip_prefix("Z/")
            .and_then(|m| m.trim().parse::<u64>().ok())
            .ok_or_else(|| Error::InvalidArgument(format!("cannot parse cyclic group '{s}'")))?;
        if m < 2 {
            return Err(Error::InvalidArgument(format!("torsion order must be at least 2 in '{s}'")));
        }
        Ok(Cyclic::Torsion(m))
    }
}

impl std::fmt::Display for Cyclic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Cyclic::Free => write!(f, "Z"),
            Cyclic::Torsion(m) => write!(f, "Z/{m}"),
        }
    }
}

/// A degreewise finite direct sum of cyclic groups.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedAbelianGroup {
    summands: BTreeMap<i64, Vec<Cyclic>>,
}

impl GradedAbelianGroup {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, degree: i64, c: Cyclic) {
        let slot = self.summands.entry(degree).or_default();
        slot.push(c);
        slot.sort();
    }

    pub fn with(mut self, degree: i64, c: Cyclic) -> Self {
        self.push(degree, c);
        self
    }

    pub fn degree(&self, d: i64) -> &[Cyclic] {
        self.summands.get(&d).map_or(&[], |v| v.as_slice())
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &[Cyclic])> {
        self.summands
            .iter()
            .filter(|(_, v)| !v.is_empty())
            .map(|(d, v)| (*d, v.as_slice()))
    }

    pub fn is_zero(&self) -> bool {
        self.summands.values().all(|v| v.is_empty())
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.iter().map(|(d, _)| d)
    }
}

/// A bounded chain complex of free abelian groups, `∂_m: C_m → C_{m-1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntegralChainComplex {
    ranks: BTreeMap<i64, usize>,
    /// keyed by source degree; shape `rank(m-1) x rank(m)`
    boundaries: BTreeMap<i64, Matrix<i64>>,
}

impl IntegralChainComplex {
    /// Checks shapes and `∂∂ = 0`.
    pub fn new(ranks: BTreeMap<i64, usize>, boundaries: BTreeMap<i64, Matrix<i64>>) -> Result<Self> {
        for (&m, b) in &boundaries {
            let src = ranks.get(&m).copied().unwrap_or(0);
            let tgt = ranks.get(&(m - 1)).copied().unwrap_or(0);
            if b.shape() != (tgt, src) {
                return Err(Error::ShapeMismatch(format!(
                    "boundary out of degree {m} has shape {:?}, expected ({tgt}, {src})",
                    b.shape()
                )));
            }
        }
        let c = IntegralChainComplex { ranks, boundaries };
        for (&m, b) in &c.boundaries {
            if let Some(b2) = c.boundaries.get(&(m - 1)) {
                if b.rows() == 0 || b.cols() == 0 || b2.rows() == 0 {
                    continue;
                }
                for i in 0..b2.rows() {
                    for j in 0..b.cols() {
                        let s: i128 = (0..b.rows()).map(|k| b2[(i, k)] as i128 * b[(k, j)] as i128).sum();
                        if s != 0 {
                            return Err(Error::NotAComplex(format!(
                                "∂_{} ∘ ∂_{} has nonzero entry at ({i}, {j})",
                                m - 1,
                                m
                            )));
                        }
                    }
                }
            }
        }
        Ok(c)
    }

    pub fn rank(&self, m: i64) -> usize {
        self.ranks.get(&m).copied().unwrap_or(0)
    }

    /// `∂_m`, zero if not stored.
    pub fn boundary(&self, m: i64) -> Matrix<i64> {
        self.boundaries
            .get(&m)
            .cloned()
            .unwrap_or_else(|| Matrix::filled(self.rank(m - 1), self.rank(m), 0))
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.ranks.iter().filter(|(_, &r)| r > 0).map(|(&d, _)| d)
    }

    /// `H_*(C; Z)` via Smith normal form.
    pub fn homology(&self) -> GradedAbelianGroup {
        let mut out = GradedAbelianGroup::new();
        for m in self.degrees().collect::<Vec<_>>() {
            let out_inv = smith_invariants(&self.boundary(m));
            let in_inv = smith_invariants(&self.boundary(m + 1));
            let free = self.rank(m) - out_inv.len() - in_inv.len();
            for _ in 0..free {
                out.push(m, Cyclic::Free);
            }
            for d in in_inv.into_iter().filter(|&d| d > 1) {
                out.push(m, Cyclic::Torsion(d as u64));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Matrix<i64> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect(), cols)
    }

    #[test]
    fn smith_examples() {
        assert_eq!(smith_invariants(&mat(&[&[2, 0], &[0, 3]])), vec![1, 6]);
        assert_eq!(smith_invariants(&mat(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]])), vec![2, 6, 12]);
        assert_eq!(smith_invariants(&mat(&[&[0, 0], &[0, 0]])), Vec::<i64>::new());
        assert_eq!(smith_invariants(&mat(&[&[4, 6]])), vec![2]);
    }

    #[test]
    fn homology_of_multiplication_by_four() {
        let c = IntegralChainComplex::new(
            BTreeMap::from([(0, 1), (1, 1)]),
            BTreeMap::from([(1, mat(&[&[4]]))]),
        )
        .unwrap();
        assert_eq!(c.homology(), GradedAbelianGroup::new().with(0, Cyclic::Torsion(4)));
    }

    #[test]
    fn rejects_non_complex() {
        let err = IntegralChainComplex::new(
            BTreeMap::from([(0, 1), (1, 1), (2, 1)]),
            BTreeMap::from([(1, mat(&[&[1]])), (2, mat(&[&[1]]))]),
        );
        assert!(matches!(err, Err(Error::NotAComplex(_))));
    }

    #[test]
    fn parse_cyclic() {
        assert_eq!(Cyclic::parse("Z").unwrap(), Cyclic::Free);
        assert_eq!(Cyclic::parse("Z/9").unwrap(), Cyclic::Torsion(9));
        assert!(Cyclic::parse("Z/1").is_err());
        assert!(Cyclic::parse("Q").is_err());
        assert_eq!(Cyclic::Torsion(4).to_string(), "Z/4");
    }
}
