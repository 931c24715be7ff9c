//! Seeded random instances, built only from identity-preserving constructors.
//!
//! Complexes are direct sums of indecomposable pieces (dots, arrows,
//! staircases, squares) followed by a random change of basis in every
//! degree; cosimplicial objects are then produced by inverse Dold–Kan,
//! external products, direct sums and constants.

use rand::Rng;

use super::bicosimplicial::BicosimplicialVectorSpace;
use super::complex::CochainComplex;
use super::double::DoubleCochainComplex;
use super::sets::{FiniteBicosimplicialSet, FiniteCosimplicialSet};
use super::vector::CosimplicialVectorSpace;
use crate::field::{Field, Fp};
use crate::matrix::Matrix;

fn random_scalar<F: Field, R: Rng>(f: &F, rng: &mut R) -> F::Elem {
    f.from_i64(rng.gen_range(-4..=4))
}

/// A random invertible matrix and its inverse, as a product of elementary
/// operations.
pub fn random_invertible<F: Field, R: Rng>(f: &F, rng: &mut R, n: usize) -> (Matrix<F::Elem>, Matrix<F::Elem>) {
    let mut p = Matrix::identity(f, n);
    let mut q = Matrix::identity(f, n);
    if n < 2 {
        return (p, q);
    }
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let c = random_scalar(f, rng);
        // p ← E p with E = I + c e_{ij}; q ← q E^{-1}
        for k in 0..n {
            let t = f.mul(&c, &p[(j, k)]);
            p[(i, k)] = f.add(&p[(i, k)], &t);
            let u = f.mul(&c, &q[(k, i)]);
            q[(k, j)] = f.sub(&q[(k, j)], &u);
        }
    }
    (p, q)
}

fn conjugate<F: Field>(f: &F, target: &Matrix<F::Elem>, m: &Matrix<F::Elem>, source_inv: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    target.mul(f, &m.mul(f, source_inv))
}

/// A random cochain complex on levels `0..=top` with at most `pieces`
/// indecomposable summands.
pub fn cochain_complex<F: Field, R: Rng>(f: &F, rng: &mut R, top: usize, pieces: usize) -> CochainComplex<F> {
    let mut cells: Vec<Vec<(usize, Option<usize>)>> = Vec::new();
    let mut dims = vec![0usize; top + 1];
    for _ in 0..rng.gen_range(0..=pieces) {
        let k = rng.gen_range(0..=top);
        if k < top && rng.gen_bool(0.5) {
            cells.push(vec![(k, Some(dims[k + 1])), (k + 1, None)]);
            dims[k] += 1;
            dims[k + 1] += 1;
        } else {
            cells.push(vec![(k, None)]);
            dims[k] += 1;
        }
    }
    let mut next = vec![0usize; top + 1];
    let mut diffs: Vec<Matrix<F::Elem>> = (0..top).map(|s| Matrix::zeros(f, dims[s + 1], dims[s])).collect();
    for cell in &cells {
        let (k, hit) = cell[0];
        let src = next[k];
        next[k] += 1;
        if let Some(t) = hit {
            diffs[k][(t, src)] = f.one();
            next[k + 1] += 1;
        }
    }
    let bases: Vec<_> = dims.iter().map(|&d| random_invertible(f, rng, d)).collect();
    let diffs = (0..top)
        .map(|s| conjugate(f, &bases[s + 1].0, &diffs[s], &bases[s].1))
        .collect();
    CochainComplex::new(f.clone(), dims, diffs).expect("sums of cells are complexes")
}

/// A random double complex on `0..=width × 0..=height`.
pub fn double_complex<F: Field, R: Rng>(
    f: &F,
    rng: &mut R,
    width: usize,
    height: usize,
    pieces: usize,
) -> DoubleCochainComplex<F> {
    // elements are bidegrees; edges (source, target, horizontal?)
    let mut elems: Vec<(usize, usize)> = Vec::new();
    let mut edges: Vec<(usize, usize, bool)> = Vec::new();
    let fits = |a: i64, b: i64| a >= 0 && b >= 0 && a <= width as i64 && b <= height as i64;
    for _ in 0..rng.gen_range(0..=pieces) {
        let (a, b) = (rng.gen_range(0..=width) as i64, rng.gen_range(0..=height) as i64);
        let base = elems.len();
        match rng.gen_range(0..3) {
            0 => elems.push((a as usize, b as usize)),
            1 => {
                // staircase: sources and targets alternate
                let len = rng.gen_range(2..=5);
                let first_is_target = rng.gen_bool(0.5);
                let mut pos = vec![(a, b)];
                for i in 1..len {
                    let (pa, pb) = pos[i - 1];
                    let prev_is_source = (i - 1) % 2 == usize::from(first_is_target);
                    pos.push(if prev_is_source { (pa + 1, pb) } else { (pa, pb - 1) });
                }
                if !pos.iter().all(|&(x, y)| fits(x, y)) {
                    continue;
                }
                elems.extend(pos.iter().map(|&(x, y)| (x as usize, y as usize)));
                for i in 0..len - 1 {
                    let is_source = i % 2 == usize::from(first_is_target);
                    if is_source {
                        edges.push((base + i, base + i + 1, true));
                    } else {
                        edges.push((base + i + 1, base + i, false));
                    }
                }
            }
            _ => {
                if !fits(a + 1, b + 1) {
                    continue;
                }
                let (a, b) = (a as usize, b as usize);
                elems.extend([(a, b), (a + 1, b), (a, b + 1), (a + 1, b + 1)]);
                edges.extend([
                    (base, base + 1, true),
                    (base, base + 2, false),
                    (base + 1, base + 3, false),
                    (base + 2, base + 3, true),
                ]);
            }
        }
    }
    let mut dims = vec![vec![0usize; height + 1]; width + 1];
    let index: Vec<usize> = elems
        .iter()
        .map(|&(a, b)| {
            dims[a][b] += 1;
            dims[a][b] - 1
        })
        .collect();
    let mut horizontal: Vec<Vec<Matrix<F::Elem>>> = (0..width)
        .map(|a| (0..=height).map(|b| Matrix::zeros(f, dims[a + 1][b], dims[a][b])).collect())
        .collect();
    let mut vertical: Vec<Vec<Matrix<F::Elem>>> = (0..=width)
        .map(|a| (0..height).map(|b| Matrix::zeros(f, dims[a][b + 1], dims[a][b])).collect())
        .collect();
    for &(s, t, h) in &edges {
        let (a, b) = elems[s];
        if h {
            horizontal[a][b][(index[t], index[s])] = f.one();
        } else {
            vertical[a][b][(index[t], index[s])] = f.one();
        }
    }
    let bases: Vec<Vec<_>> = dims
        .iter()
        .map(|col| col.iter().map(|&d| random_invertible(f, rng, d)).collect())
        .collect();
    let horizontal = (0..width)
        .map(|a| {
            (0..=height)
                .map(|b| conjugate(f, &bases[a + 1][b].0, &horizontal[a][b], &bases[a][b].1))
                .collect()
        })
        .collect();
    let vertical = (0..=width)
        .map(|a| {
            (0..height)
                .map(|b| conjugate(f, &bases[a][b + 1].0, &vertical[a][b], &bases[a][b].1))
                .collect()
        })
        .collect();
    DoubleCochainComplex::new(f.clone(), dims, horizontal, vertical).expect("sums of pieces are double complexes")
}

/// A random cosimplicial vector space: inverse Dold–Kan of a random complex,
/// possibly summed with a constant.
pub fn cosimplicial<F: Field, R: Rng>(f: &F, rng: &mut R, top: usize) -> CosimplicialVectorSpace<F> {
    let c = cochain_complex(f, rng, top.min(2), 3);
    let x = CosimplicialVectorSpace::from_cochain_complex(&c, top);
    if rng.gen_bool(0.3) {
        x.direct_sum(&CosimplicialVectorSpace::constant(f.clone(), 1, top))
            .expect("same truncation")
    } else {
        x
    }
}

/// A random bicosimplicial vector space truncated at `(top, top)`.
pub fn bicosimplicial<F: Field, R: Rng>(f: &F, rng: &mut R, top: usize) -> BicosimplicialVectorSpace<F> {
    let one = |rng: &mut R| -> BicosimplicialVectorSpace<F> {
        match rng.gen_range(0..5) {
            0 => BicosimplicialVectorSpace::constant(f.clone(), rng.gen_range(0..=2), top),
            1 | 2 => {
                let c = cosimplicial(f, rng, top);
                let d = cosimplicial(f, rng, top);
                BicosimplicialVectorSpace::external_product(&c, &d).expect("same truncation")
            }
            _ => {
                let d = double_complex(f, rng, 2, 2, 3);
                BicosimplicialVectorSpace::from_double_complex(&d, top)
            }
        }
    };
    let x = one(rng);
    if rng.gen_bool(0.25) {
        x.direct_sum(&one(rng)).expect("same truncation")
    } else {
        x
    }
}

/// A random finite cosimplicial set with levels `0..=top`.
pub fn cosimplicial_set<R: Rng>(rng: &mut R, top: usize) -> FiniteCosimplicialSet {
    let atom = |rng: &mut R| match rng.gen_range(0..3) {
        0 => FiniteCosimplicialSet::constant(rng.gen_range(1..=2), top),
        1 => FiniteCosimplicialSet::representable(0, top),
        _ => FiniteCosimplicialSet::representable(1, top),
    };
    let x = atom(rng);
    match rng.gen_range(0..3) {
        0 => x,
        1 => x.coproduct(&atom(rng)).expect("same truncation"),
        _ => x.product(&atom(rng)).expect("same truncation"),
    }
}

/// Largest set size among bidegrees `≤ (1, 1)`.
fn low_size(x: &FiniteBicosimplicialSet) -> usize {
    [(0, 0), (1, 0), (0, 1), (1, 1)].iter().map(|&(a, b)| x.size(a, b)).max().unwrap_or(0)
}

/// A random finite bicosimplicial set truncated at `(2, 2)` with at most
/// `max_size` elements in each bidegree `≤ (1, 1)`.
pub fn bicosimplicial_set<R: Rng>(rng: &mut R, max_size: usize) -> FiniteBicosimplicialSet {
    let top = 2;
    loop {
        let x = match rng.gen_range(0..4) {
            0 => FiniteBicosimplicialSet::constant(rng.gen_range(1..=max_size.max(1)), top),
            1 => {
                let a = cosimplicial_set(rng, top);
                let b = cosimplicial_set(rng, top);
                FiniteBicosimplicialSet::external_product(&a, &b).expect("same truncation")
            }
            2 => {
                let y = cosimplicial_set(rng, 2 * top + 1);
                FiniteBicosimplicialSet::ordinal_sum(&y, top).expect("enough levels")
            }
            _ => {
                let f2 = Fp::new(2).expect("2 is prime");
                let d = double_complex(&f2, rng, 1, 1, 2);
                let b = BicosimplicialVectorSpace::from_double_complex(&d, top);
                match FiniteBicosimplicialSet::underlying(&b) {
                    Ok(x) => x,
                    Err(_) => continue,
                }
            }
        };
        if low_size(&x) <= max_size {
            return x;
        }
    }
}
