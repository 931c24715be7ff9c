use super::complex::CochainComplex;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{Matrix, Quotient};
use crate::specseq::{turn_page, BigradedPage, DifferentialData, Provenance, SpectralSequence};

/// A first-quadrant double cochain complex on `0..=width × 0..=height`.
///
/// The two differentials commute; the total differential is
/// `d = d_h + (−1)^a d_v` on `C^{a,b}`.
#[derive(Clone, Debug, PartialEq)]
pub struct DoubleCochainComplex<F: Field> {
    field: F,
    /// `dims[a][b]`
    dims: Vec<Vec<usize>>,
    /// `horizontal[a][b]: C^{a,b} → C^{a+1,b}` for `a < width`.
    horizontal: Vec<Vec<Matrix<F::Elem>>>,
    /// `vertical[a][b]: C^{a,b} → C^{a,b+1}` for `b < height`.
    vertical: Vec<Vec<Matrix<F::Elem>>>,
}

impl<F: Field> DoubleCochainComplex<F> {
    pub fn new(
        field: F,
        dims: Vec<Vec<usize>>,
        horizontal: Vec<Vec<Matrix<F::Elem>>>,
        vertical: Vec<Vec<Matrix<F::Elem>>>,
    ) -> Result<Self> {
        let w = dims.len();
        let h = dims.first().map_or(0, Vec::len);
        if w == 0 || h == 0 || dims.iter().any(|c| c.len() != h) {
            return Err(Error::ShapeMismatch("dimensions must form a non-empty rectangle".into()));
        }
        if horizontal.len() != w - 1 || horizontal.iter().any(|c| c.len() != h) {
            return Err(Error::ShapeMismatch("need a horizontal map out of every bidegree but the last column".into()));
        }
        if vertical.len() != w || vertical.iter().any(|c| c.len() != h - 1) {
            return Err(Error::ShapeMismatch("need a vertical map out of every bidegree but the last row".into()));
        }
        for a in 0..w {
            for b in 0..h {
                if a + 1 < w && horizontal[a][b].shape() != (dims[a + 1][b], dims[a][b]) {
                    return Err(Error::ShapeMismatch(format!("d_h at ({a}, {b}) has shape {:?}", horizontal[a][b].shape())));
                }
                if b + 1 < h && vertical[a][b].shape() != (dims[a][b + 1], dims[a][b]) {
                    return Err(Error::ShapeMismatch(format!("d_v at ({a}, {b}) has shape {:?}", vertical[a][b].shape())));
                }
            }
        }
        let d = DoubleCochainComplex {
            field,
            dims,
            horizontal,
            vertical,
        };
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<()> {
        let f = &self.field;
        for a in 0..=self.width() {
            for b in 0..=self.height() {
                let hh = self.horizontal(a + 1, b).mul(f, &self.horizontal(a, b));
                let vv = self.vertical(a, b + 1).mul(f, &self.vertical(a, b));
                if !hh.is_zero(f) || !vv.is_zero(f) {
                    return Err(Error::NotAComplex(format!("a differential squares to nonzero at ({a}, {b})")));
                }
                let hv = self.horizontal(a, b + 1).mul(f, &self.vertical(a, b));
                let vh = self.vertical(a + 1, b).mul(f, &self.horizontal(a, b));
                if hv != vh {
                    return Err(Error::NotAComplex(format!("d_h and d_v do not commute at ({a}, {b})")));
                }
            }
        }
        Ok(())
    }

    /// The complex with a single column `C^{0,*} = c`.
    pub fn column(c: &CochainComplex<F>) -> Self {
        let f = c.field().clone();
        let h = c.top() + 1;
        DoubleCochainComplex::new(
            f,
            vec![c.dims().to_vec()],
            Vec::new(),
            vec![(0..h - 1).map(|b| c.differential(b)).collect()],
        )
        .expect("a single column is a double complex")
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn width(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn height(&self) -> usize {
        self.dims[0].len() - 1
    }

    pub fn dim(&self, a: usize, b: usize) -> usize {
        self.dims.get(a).and_then(|c| c.get(b)).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &[Vec<usize>] {
        &self.dims
    }

    /// `d_h` out of `C^{a,b}`, zero outside the stored range.
    pub fn horizontal(&self, a: usize, b: usize) -> Matrix<F::Elem> {
        match self.horizontal.get(a).and_then(|c| c.get(b)) {
            Some(m) => m.clone(),
            None => Matrix::zeros(&self.field, self.dim(a + 1, b), self.dim(a, b)),
        }
    }

    /// `d_v` out of `C^{a,b}`, zero outside the stored range.
    pub fn vertical(&self, a: usize, b: usize) -> Matrix<F::Elem> {
        match self.vertical.get(a).and_then(|c| c.get(b)) {
            Some(m) => m.clone(),
            None => Matrix::zeros(&self.field, self.dim(a, b + 1), self.dim(a, b)),
        }
    }

    /// Column `a` as a cochain complex under `d_v`.
    pub fn vertical_complex(&self, a: usize) -> CochainComplex<F> {
        CochainComplex::new(
            self.field.clone(),
            self.dims[a].clone(),
            (0..self.height()).map(|b| self.vertical(a, b)).collect(),
        )
        .expect("columns are complexes")
    }

    /// Offset of the block `C^{a, n−a}` inside `Tot^n`, blocks ordered by `a`.
    fn offset(&self, n: usize, a: usize) -> usize {
        (0..a.min(n + 1)).map(|i| if n - i <= self.height() { self.dim(i, n - i) } else { 0 }).sum()
    }

    fn tot_dim(&self, n: usize) -> usize {
        self.offset(n, n + 1)
    }

    fn total_differential(&self, n: usize) -> Matrix<F::Elem> {
        let f = &self.field;
        let mut d = Matrix::zeros(f, self.tot_dim(n + 1), self.tot_dim(n));
        for a in 0..=n.min(self.width()) {
            let b = n - a;
            if b > self.height() || self.dim(a, b) == 0 {
                continue;
            }
            let c0 = self.offset(n, a);
            let mut place = |m: Matrix<F::Elem>, r0: usize| {
                for i in 0..m.rows() {
                    for j in 0..m.cols() {
                        d[(r0 + i, c0 + j)] = m[(i, j)].clone();
                    }
                }
            };
            place(self.horizontal(a, b), self.offset(n + 1, a + 1));
            place(self.vertical(a, b).scale(f, &f.sign(a % 2 == 1)), self.offset(n + 1, a));
        }
        d
    }

    /// The total complex, degrees `0..=width+height`.
    pub fn total(&self) -> CochainComplex<F> {
        let top = self.width() + self.height();
        CochainComplex::new(
            self.field.clone(),
            (0..=top).map(|n| self.tot_dim(n)).collect(),
            (0..top).map(|n| self.total_differential(n)).collect(),
        )
        .expect("total complex of a double complex")
    }

    pub fn total_cohomology(&self) -> Vec<usize> {
        self.total().cohomology_dims()
    }

    /// The spectral sequence of the filtration by columns, from `E_1` (vertical
    /// cohomology) on; `d_r` has bidegree `(r, 1 − r)`.
    ///
    /// Every page is computed from the filtered total complex and checked
    /// against [`turn_page`]; the `E_∞` diagonals are checked against the
    /// total cohomology.
    pub fn totalization_ss(&self) -> SpectralSequence<F> {
        let f = &self.field;
        let top = self.width() + self.height();
        let tot = self.total();
        let diffs: Vec<Matrix<F::Elem>> = (0..=top).map(|n| tot.differential(n)).collect();
        // cycles: x ∈ F^p Tot^n with dx ∈ F^{p+r} Tot^{n+1}
        let z = |r: usize, p: i64, n: i64| -> Matrix<F::Elem> {
            if n < 0 || n as usize > top {
                return Matrix::zeros(f, if n >= 0 { self.tot_dim(n as usize) } else { 0 }, 0);
            }
            let n = n as usize;
            let dim = self.tot_dim(n);
            let start = self.offset(n, p.max(0) as usize);
            let stop = self.offset(n + 1, (p + r as i64).max(0) as usize);
            let d = &diffs[n];
            let block = Matrix::from_fn(stop, dim - start, |i, j| d[(i, start + j)].clone());
            let k = block.kernel(f);
            Matrix::from_fn(dim, k.cols(), |i, j| if i < start { f.zero() } else { k[(i - start, j)].clone() })
        };
        let quotient = |r: usize, p: i64, n: usize| -> Quotient<F> {
            let cycles = z(r, p, n as i64);
            let mut denom = z(r - 1, p + 1, n as i64);
            if n > 0 {
                denom = denom.hstack(&diffs[n - 1].mul(f, &z(r - 1, p - r as i64 + 1, n as i64 - 1)));
            }
            Quotient::new(f, &cycles, &denom)
        };
        let spots: Vec<(usize, usize)> = (0..=self.width())
            .flat_map(|a| (0..=self.height()).map(move |b| (a, b)))
            .collect();
        let page_at = |r: usize| -> BigradedPage {
            let mut page = BigradedPage::new(r as u32);
            for &(a, b) in &spots {
                page.set_dim((a as i64, b as i64), quotient(r, a as i64, a + b).dim());
            }
            page
        };
        let last = (self.width() + 1).max(2);
        let mut ss = SpectralSequence::empty(f.clone(), Provenance::Totalization, 1);
        ss.pages.clear();
        let mut page = page_at(1);
        for r in 1..=last {
            let mut d = DifferentialData::with_shift(r as u32, (r as i64, 1 - r as i64));
            for &(a, b) in &spots {
                let (ta, tb) = (a + r, b as i64 + 1 - r as i64);
                if page.dim((a as i64, b as i64)) == 0 || ta > self.width() || tb < 0 {
                    continue;
                }
                let tb = tb as usize;
                if page.dim((ta as i64, tb as i64)) == 0 {
                    continue;
                }
                let src = quotient(r, a as i64, a + b);
                let tgt = quotient(r, ta as i64, a + b + 1);
                let reps = src.complement();
                let cols: Vec<Vec<F::Elem>> = (0..reps.cols())
                    .map(|j| {
                        let image = diffs[a + b].apply(f, &reps.column(j));
                        tgt.coordinates(&image).expect("d_r lands in the target cycles")
                    })
                    .collect();
                d.insert((a as i64, b as i64), Matrix::from_columns(tgt.dim(), &cols, f.zero()));
            }
            let next = page_at(r + 1);
            let turned = turn_page(f, &page, &d).expect("totalization pages are consistent");
            assert!(turned.same_dims(&next), "page bookkeeping disagrees with the filtration at E_{}", r + 1);
            ss.pages.push((page, d));
            page = next;
        }
        let cohomology = tot.cohomology_dims();
        for (n, &h) in cohomology.iter().enumerate() {
            let diagonal: usize = (0..=n.min(self.width())).map(|a| page.dim((a as i64, (n - a) as i64))).sum();
            assert_eq!(diagonal, h, "E_∞ diagonal {n} disagrees with total cohomology");
        }
        ss.infinity = page;
        ss.reliable_s_max = Some(self.width() as i64);
        ss
    }
}
