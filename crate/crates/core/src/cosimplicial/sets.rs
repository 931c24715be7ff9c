use serde::Serialize;

use super::bicosimplicial::BicosimplicialVectorSpace;
use super::delta;
use super::identities::{self, Op};
use crate::error::{Error, Result};
use crate::field::Fp;

/// A finite cosimplicial set truncated at level `top`, with elements of each
/// level numbered `0..size`. Structure maps are stored as value tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteCosimplicialSet {
    sizes: Vec<usize>,
    /// `cofaces[s][i][x] = d^i x`, from level `s` to `s + 1`.
    cofaces: Vec<Vec<Vec<usize>>>,
    /// `codegeneracies[s][i][x] = s^i x`, from level `s` to `s − 1`.
    codegeneracies: Vec<Vec<Vec<usize>>>,
}

impl FiniteCosimplicialSet {
    pub fn new(sizes: Vec<usize>, cofaces: Vec<Vec<Vec<usize>>>, codegeneracies: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::InvalidArgument("at least one level is required".into()));
        }
        let top = sizes.len() - 1;
        if cofaces.len() != top || codegeneracies.len() != top + 1 {
            return Err(Error::ShapeMismatch(format!("{} levels: wrong number of structure maps", top + 1)));
        }
        let table_ok = |tab: &[usize], src: usize, tgt: usize| tab.len() == src && tab.iter().all(|&y| y < tgt);
        for (s, maps) in cofaces.iter().enumerate() {
            if maps.len() != s + 2 || !maps.iter().all(|t| table_ok(t, sizes[s], sizes[s + 1])) {
                return Err(Error::ShapeMismatch(format!("malformed cofaces out of level {s}")));
            }
        }
        for (s, maps) in codegeneracies.iter().enumerate() {
            if maps.len() != s || !maps.iter().all(|t| table_ok(t, sizes[s], sizes[s - 1])) {
                return Err(Error::ShapeMismatch(format!("malformed codegeneracies out of level {s}")));
            }
        }
        let x = FiniteCosimplicialSet {
            sizes,
            cofaces,
            codegeneracies,
        };
        x.validate()?;
        Ok(x)
    }

    fn validate(&self) -> Result<()> {
        identities::check(
            "cosimplicial set",
            self.top(),
            |s, i| self.cofaces[s][i].clone(),
            |s, i| self.codegeneracies[s][i].clone(),
            |a, b| delta::compose(a, b),
            |s| (0..self.sizes[s]).collect(),
        )
    }

    pub fn constant(size: usize, top: usize) -> Self {
        let id: Vec<usize> = (0..size).collect();
        FiniteCosimplicialSet {
            sizes: vec![size; top + 1],
            cofaces: (0..top).map(|s| vec![id.clone(); s + 2]).collect(),
            codegeneracies: (0..=top).map(|s| vec![id.clone(); s]).collect(),
        }
    }

    /// The representable `Hom([k], −)`: level `n` is the monotone maps `[k] → [n]`.
    pub fn representable(k: usize, top: usize) -> Self {
        let levels: Vec<Vec<Vec<usize>>> = (0..=top).map(|n| delta::monotone_maps(k, n)).collect();
        let index = |n: usize, map: &[usize]| levels[n].iter().position(|m| m == map).expect("monotone map");
        let push = |n: usize, theta: &[usize], target: usize| -> Vec<usize> {
            levels[n].iter().map(|m| index(target, &delta::compose(theta, m))).collect()
        };
        let cofaces = (0..top)
            .map(|s| (0..=s + 1).map(|i| push(s, &delta::coface(s + 1, i), s + 1)).collect())
            .collect();
        let codegeneracies = (0..=top)
            .map(|s| (0..s).map(|i| push(s, &delta::codegeneracy(s - 1, i), s - 1)).collect())
            .collect();
        let x = FiniteCosimplicialSet {
            sizes: levels.iter().map(Vec::len).collect(),
            cofaces,
            codegeneracies,
        };
        x.validate().expect("representable is cosimplicial");
        x
    }

    pub fn coproduct(&self, other: &Self) -> Result<Self> {
        self.same_top(other)?;
        let join = |a: &Vec<usize>, b: &Vec<usize>, shift: usize| -> Vec<usize> {
            a.iter().copied().chain(b.iter().map(|y| y + shift)).collect()
        };
        Ok(FiniteCosimplicialSet {
            sizes: self.sizes.iter().zip(&other.sizes).map(|(a, b)| a + b).collect(),
            cofaces: (0..self.top())
                .map(|s| (0..=s + 1).map(|i| join(&self.cofaces[s][i], &other.cofaces[s][i], self.sizes[s + 1])).collect())
                .collect(),
            codegeneracies: (0..=self.top())
                .map(|s| {
                    (0..s)
                        .map(|i| join(&self.codegeneracies[s][i], &other.codegeneracies[s][i], self.sizes[s - 1]))
                        .collect()
                })
                .collect(),
        })
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.same_top(other)?;
        let pair = |a: &Vec<usize>, b: &Vec<usize>, tgt: usize| -> Vec<usize> {
            a.iter().flat_map(|&x| b.iter().map(move |&y| x * tgt + y)).collect()
        };
        Ok(FiniteCosimplicialSet {
            sizes: self.sizes.iter().zip(&other.sizes).map(|(a, b)| a * b).collect(),
            cofaces: (0..self.top())
                .map(|s| (0..=s + 1).map(|i| pair(&self.cofaces[s][i], &other.cofaces[s][i], other.sizes[s + 1])).collect())
                .collect(),
            codegeneracies: (0..=self.top())
                .map(|s| {
                    (0..s)
                        .map(|i| pair(&self.codegeneracies[s][i], &other.codegeneracies[s][i], other.sizes[s - 1]))
                        .collect()
                })
                .collect(),
        })
    }

    /// Restriction to levels `0..=top`.
    pub fn truncate(&self, top: usize) -> Self {
        assert!(top <= self.top());
        FiniteCosimplicialSet {
            sizes: self.sizes[..=top].to_vec(),
            cofaces: self.cofaces[..top].to_vec(),
            codegeneracies: self.codegeneracies[..=top].to_vec(),
        }
    }

    fn same_top(&self, other: &Self) -> Result<()> {
        if self.top() == other.top() {
            Ok(())
        } else {
            Err(Error::ShapeMismatch("different truncations".into()))
        }
    }

    pub fn top(&self) -> usize {
        self.sizes.len() - 1
    }

    pub fn size(&self, s: usize) -> usize {
        self.sizes[s]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn coface(&self, s: usize, i: usize) -> &[usize] {
        &self.cofaces[s][i]
    }

    pub fn codegeneracy(&self, s: usize, i: usize) -> &[usize] {
        &self.codegeneracies[s][i]
    }

    pub(crate) fn apply(&self, s: usize, op: Op) -> &[usize] {
        match op {
            Op::Coface(i) => &self.cofaces[s][i],
            Op::Codegeneracy(i) => &self.codegeneracies[s][i],
        }
    }

    /// `π^0`: the elements `x` of level 0 with `d^0 x = d^1 x`.
    pub fn pi0(&self) -> Result<Vec<usize>> {
        if self.top() == 0 {
            return Err(Error::OutOfRange("the equalizer needs level 1".into()));
        }
        Ok((0..self.sizes[0])
            .filter(|&x| self.cofaces[0][0][x] == self.cofaces[0][1][x])
            .collect())
    }
}

/// A finite bicosimplicial set truncated at `(top, top)`.
///
/// Row `b` is the horizontal cosimplicial set `a ↦ X^{a,b}`, column `a` the
/// vertical one `b ↦ X^{a,b}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteBicosimplicialSet {
    rows: Vec<FiniteCosimplicialSet>,
    columns: Vec<FiniteCosimplicialSet>,
}

/// Outcome of comparing the two descriptions of `π^{0,0}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pi00Report {
    pub holds: bool,
    /// Elements equalized horizontally and vertically.
    pub intersection: Vec<usize>,
    /// Elements equalized by the diagonal pair `d^0_h d^0_v`, `d^1_h d^1_v`.
    pub diagonal: Vec<usize>,
    pub counterexample: Option<usize>,
}

impl FiniteBicosimplicialSet {
    pub fn new(rows: Vec<FiniteCosimplicialSet>, columns: Vec<FiniteCosimplicialSet>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || columns.len() != n {
            return Err(Error::ShapeMismatch("need equally many rows and columns".into()));
        }
        for a in 0..n {
            for b in 0..n {
                if rows[b].top() != n - 1 || columns[a].top() != n - 1 {
                    return Err(Error::ShapeMismatch("rows and columns must share the truncation".into()));
                }
                if rows[b].size(a) != columns[a].size(b) {
                    return Err(Error::ShapeMismatch(format!("rows and columns disagree on X^({a},{b})")));
                }
            }
        }
        let x = FiniteBicosimplicialSet { rows, columns };
        x.validate()?;
        Ok(x)
    }

    fn validate(&self) -> Result<()> {
        for r in &self.rows {
            r.validate()?;
        }
        for c in &self.columns {
            c.validate()?;
        }
        identities::check_commuting(
            "bicosimplicial set",
            self.top(),
            |b, a, op| self.rows[b].apply(a, op).to_vec(),
            |a, b, op| self.columns[a].apply(b, op).to_vec(),
            |x, y| delta::compose(x, y),
        )
    }

    pub fn constant(size: usize, top: usize) -> Self {
        let c = FiniteCosimplicialSet::constant(size, top);
        FiniteBicosimplicialSet {
            rows: vec![c.clone(); top + 1],
            columns: vec![c; top + 1],
        }
    }

    /// `X^{a,b} = A^a × B^b`.
    pub fn external_product(a: &FiniteCosimplicialSet, b: &FiniteCosimplicialSet) -> Result<Self> {
        a.same_top(b)?;
        let top = a.top();
        let rows = (0..=top)
            .map(|j| a.product(&FiniteCosimplicialSet::constant(b.size(j), top)))
            .collect::<Result<Vec<_>>>()?;
        let columns = (0..=top)
            .map(|i| FiniteCosimplicialSet::constant(a.size(i), top).product(b))
            .collect::<Result<Vec<_>>>()?;
        FiniteBicosimplicialSet::new(rows, columns)
    }

    /// The total décalage-style object `X^{a,b} = Y^{a+b+1}`: horizontal
    /// structure maps are those of `Y` with the low indices, vertical ones
    /// are shifted past them.
    pub fn ordinal_sum(y: &FiniteCosimplicialSet, top: usize) -> Result<Self> {
        if y.top() < 2 * top + 1 {
            return Err(Error::InvalidArgument(format!(
                "ordinal sum at truncation {top} needs {} levels",
                2 * top + 2
            )));
        }
        // horizontal: vary a with b fixed; level a of row b is Y^{a+b+1}
        let row = |b: usize| {
            let sizes = (0..=top).map(|a| y.size(a + b + 1)).collect();
            let cofaces = (0..top)
                .map(|a| (0..=a + 1).map(|i| y.coface(a + b + 1, i).to_vec()).collect())
                .collect();
            let codegeneracies = (0..=top)
                .map(|a| (0..a).map(|i| y.codegeneracy(a + b + 1, i).to_vec()).collect())
                .collect();
            FiniteCosimplicialSet::new(sizes, cofaces, codegeneracies)
        };
        let column = |a: usize| {
            let sizes = (0..=top).map(|b| y.size(a + b + 1)).collect();
            let cofaces = (0..top)
                .map(|b| (0..=b + 1).map(|j| y.coface(a + b + 1, a + 1 + j).to_vec()).collect())
                .collect();
            let codegeneracies = (0..=top)
                .map(|b| (0..b).map(|j| y.codegeneracy(a + b + 1, a + 1 + j).to_vec()).collect())
                .collect();
            FiniteCosimplicialSet::new(sizes, cofaces, codegeneracies)
        };
        FiniteBicosimplicialSet::new(
            (0..=top).map(row).collect::<Result<_>>()?,
            (0..=top).map(column).collect::<Result<_>>()?,
        )
    }

    /// The underlying bicosimplicial set of a bicosimplicial `F_p`-vector
    /// space; vectors are numbered by their base-`p` digits.
    pub fn underlying(b: &BicosimplicialVectorSpace<Fp>) -> Result<Self> {
        let f = *b.field();
        let p = f.p() as usize;
        let top = b.top();
        let size = |a: usize, c: usize| -> Result<usize> {
            p.checked_pow(b.dim(a, c) as u32)
                .filter(|&n| n <= 1 << 16)
                .ok_or_else(|| Error::InvalidArgument("vector space too large to enumerate".into()))
        };
        let decode = |mut x: usize, dim: usize| -> Vec<u32> {
            (0..dim)
                .map(|_| {
                    let d = (x % p) as u32;
                    x /= p;
                    d
                })
                .collect()
        };
        let encode = |v: &[u32]| v.iter().rev().fold(0usize, |acc, &d| acc * p + d as usize);
        let table = |m: &crate::matrix::Matrix<u32>, src: usize| -> Vec<usize> {
            (0..src).map(|x| encode(&m.apply(&f, &decode(x, m.cols())))).collect()
        };
        let mut rows = Vec::new();
        for c in 0..=top {
            let sizes = (0..=top).map(|a| size(a, c)).collect::<Result<Vec<_>>>()?;
            let row = b.row(c);
            let cofaces = (0..top)
                .map(|a| (0..=a + 1).map(|i| table(row.coface(a, i), sizes[a])).collect())
                .collect();
            let codegeneracies = (0..=top)
                .map(|a| (0..a).map(|i| table(row.codegeneracy(a, i), sizes[a])).collect())
                .collect();
            rows.push(FiniteCosimplicialSet::new(sizes, cofaces, codegeneracies)?);
        }
        let mut columns = Vec::new();
        for a in 0..=top {
            let sizes = (0..=top).map(|c| size(a, c)).collect::<Result<Vec<_>>>()?;
            let col = b.column(a);
            let cofaces = (0..top)
                .map(|c| (0..=c + 1).map(|i| table(col.coface(c, i), sizes[c])).collect())
                .collect();
            let codegeneracies = (0..=top)
                .map(|c| (0..c).map(|i| table(col.codegeneracy(c, i), sizes[c])).collect())
                .collect();
            columns.push(FiniteCosimplicialSet::new(sizes, cofaces, codegeneracies)?);
        }
        FiniteBicosimplicialSet::new(rows, columns)
    }

    pub fn top(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn size(&self, a: usize, b: usize) -> usize {
        self.rows[b].size(a)
    }

    pub fn row(&self, b: usize) -> &FiniteCosimplicialSet {
        &self.rows[b]
    }

    pub fn column(&self, a: usize) -> &FiniteCosimplicialSet {
        &self.columns[a]
    }

    /// `π^0` of the level-0 row.
    pub fn pi0_equalizer(&self) -> Result<Vec<usize>> {
        self.rows[0].pi0()
    }

    /// Compares `{x : d^0_h x = d^1_h x} ∩ {x : d^0_v x = d^1_v x}` with
    /// `{x : d^0_h d^0_v x = d^1_h d^1_v x}` inside `X^{0,0}`.
    pub fn check_pi00_lemma(&self) -> Result<Pi00Report> {
        if self.top() == 0 {
            return Err(Error::OutOfRange("the lemma needs bidegree (1, 1)".into()));
        }
        let h = &self.rows[0];
        let v = &self.columns[0];
        let h1 = &self.rows[1];
        let n = self.size(0, 0);
        let intersection: Vec<usize> = (0..n)
            .filter(|&x| h.coface(0, 0)[x] == h.coface(0, 1)[x] && v.coface(0, 0)[x] == v.coface(0, 1)[x])
            .collect();
        let diagonal: Vec<usize> = (0..n)
            .filter(|&x| h1.coface(0, 0)[v.coface(0, 0)[x]] == h1.coface(0, 1)[v.coface(0, 1)[x]])
            .collect();
        let counterexample = (0..n).find(|x| intersection.contains(x) != diagonal.contains(x));
        Ok(Pi00Report {
            holds: counterexample.is_none(),
            intersection,
            diagonal,
            counterexample,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn representable_sizes() {
        assert_eq!(FiniteCosimplicialSet::representable(0, 3).sizes(), &[1, 2, 3, 4]);
        assert_eq!(FiniteCosimplicialSet::representable(1, 2).sizes(), &[1, 3, 6]);
        assert_eq!(FiniteCosimplicialSet::representable(0, 3).pi0().unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn broken_table_rejected() {
        let x = FiniteCosimplicialSet::new(vec![1, 2], vec![vec![vec![0], vec![0]]], vec![vec![], vec![vec![0, 0]]]);
        assert!(x.is_ok());
        // s^0 d^0 must be the identity
        let bad = FiniteCosimplicialSet::new(vec![2, 2], vec![vec![vec![0, 1], vec![1, 0]]], vec![vec![], vec![vec![0, 0]]]);
        assert!(matches!(bad, Err(Error::IdentityViolated(_))));
    }

    #[test]
    fn constant_and_products_satisfy_lemma() {
        let c = FiniteBicosimplicialSet::constant(3, 2);
        let r = c.check_pi00_lemma().unwrap();
        assert!(r.holds);
        assert_eq!(r.intersection, vec![0, 1, 2]);
        let a = FiniteCosimplicialSet::representable(0, 2).coproduct(&FiniteCosimplicialSet::constant(1, 2)).unwrap();
        let b = FiniteCosimplicialSet::constant(2, 2);
        let x = FiniteBicosimplicialSet::external_product(&a, &b).unwrap();
        let r = x.check_pi00_lemma().unwrap();
        assert!(r.holds);
        assert_eq!(r.intersection, vec![2, 3]);
    }

    #[test]
    fn ordinal_sum_is_bicosimplicial() {
        let y = FiniteCosimplicialSet::representable(0, 5);
        let x = FiniteBicosimplicialSet::ordinal_sum(&y, 2).unwrap();
        assert_eq!(x.size(1, 1), 4);
        assert!(x.check_pi00_lemma().unwrap().holds);
    }
}
