//! Random integral complexes and a lattice computation of Bockstein pages
//! that uses integer column reduction only.

#![allow(dead_code)]

pub mod aq;

use std::collections::BTreeMap;

use rand::Rng;
use ssalg::integer::{Cyclic, GradedAbelianGroup, IntegralChainComplex};
use ssalg::specseq::SpectralSequence;
use ssalg::{Field, Fp, Matrix};

type Mat = Vec<Vec<i128>>;

fn zeros(rows: usize, cols: usize) -> Mat {
    vec![vec![0; cols]; rows]
}

fn to_mat(m: &Matrix<i64>) -> Mat {
    m.to_rows().into_iter().map(|r| r.into_iter().map(i128::from).collect()).collect()
}

fn from_mat(m: &Mat, cols: usize) -> Matrix<i64> {
    Matrix::from_rows(m.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect(), cols)
}

fn mul(a: &Mat, b: &Mat, inner: usize, cols: usize) -> Mat {
    let mut out = zeros(a.len(), cols);
    for (i, row) in a.iter().enumerate() {
        for k in 0..inner {
            if row[k] != 0 {
                for j in 0..cols {
                    out[i][j] += row[k] * b[k][j];
                }
            }
        }
    }
    out
}

/// A basis of `{x ∈ Z^k : a x = 0}` for `a` with `k` columns.
pub fn integer_kernel(a: &Mat, k: usize) -> Vec<Vec<i128>> {
    // columns of [a; I], reduced by unimodular column operations
    let m = a.len();
    let mut cols: Vec<Vec<i128>> = (0..k)
        .map(|j| {
            let mut c: Vec<i128> = (0..m).map(|i| a[i][j]).collect();
            c.extend((0..k).map(|l| (l == j) as i128));
            c
        })
        .collect();
    let mut active: Vec<usize> = (0..k).collect();
    for i in 0..m {
        loop {
            let nonzero: Vec<usize> = active.iter().copied().filter(|&j| cols[j][i] != 0).collect();
            if nonzero.len() <= 1 {
                if let Some(&j) = nonzero.first() {
                    active.retain(|&x| x != j);
                }
                break;
            }
            let &pivot = nonzero.iter().min_by_key(|&&j| cols[j][i].abs()).unwrap();
            for &j in &nonzero {
                if j != pivot {
                    let q = cols[j][i].div_euclid(cols[pivot][i]);
                    let pc = cols[pivot].clone();
                    for (x, y) in cols[j].iter_mut().zip(&pc) {
                        *x -= q * y;
                    }
                }
            }
        }
    }
    active.into_iter().map(|j| cols[j][m..].to_vec()).collect()
}

fn rank_mod_p(vectors: &[Vec<i128>], len: usize, p: u32) -> usize {
    let f = Fp::new(p).unwrap();
    let rows: Vec<Vec<u32>> = vectors
        .iter()
        .map(|v| v.iter().map(|&x| x.rem_euclid(p as i128) as u32).collect())
        .collect();
    if rows.is_empty() {
        return 0;
    }
    Matrix::from_rows(rows, len).rank(&f)
}

fn pow(p: u32, e: u32) -> i128 {
    (p as i128).pow(e)
}

/// `dim E_r` in degree `n`: the reductions mod `p` of
/// `{x : ∂x ∈ p^r C}` modulo those of `{x : p^{r−1} x ∈ ∂C}`.
pub fn lattice_page_dim(p: u32, c: &IntegralChainComplex, n: i64, r: u32) -> usize {
    let k = c.rank(n);
    if k == 0 {
        return 0;
    }
    let below = c.rank(n - 1);
    let above = c.rank(n + 1);
    let d_out = to_mat(&c.boundary(n));
    let d_in = to_mat(&c.boundary(n + 1));

    // [∂_n | −p^r I]
    let mut a = zeros(below, k + below);
    for i in 0..below {
        for j in 0..k {
            a[i][j] = d_out[i][j];
        }
        a[i][k + i] = -pow(p, r);
    }
    let cycles: Vec<Vec<i128>> = integer_kernel(&a, k + below).into_iter().map(|v| v[..k].to_vec()).collect();

    // [p^{r−1} I | −∂_{n+1}]
    let mut b = zeros(k, k + above);
    for i in 0..k {
        b[i][i] = pow(p, r - 1);
        for j in 0..above {
            b[i][k + j] = -d_in[i][j];
        }
    }
    let boundaries: Vec<Vec<i128>> = integer_kernel(&b, k + above).into_iter().map(|v| v[..k].to_vec()).collect();

    rank_mod_p(&cycles, k, p) - rank_mod_p(&boundaries, k, p)
}

/// A page index past which every page of `c` is `E_∞`.
pub fn stable_page(p: u32, c: &IntegralChainComplex) -> u32 {
    // elementary divisors divide a nonzero maximal minor, bounded by Hadamard
    let mut bound = 1f64;
    for m in c.degrees() {
        let d = c.boundary(m);
        let hadamard: f64 = (0..d.cols())
            .map(|j| (0..d.rows()).map(|i| (d[(i, j)] as f64).powi(2)).sum::<f64>().sqrt().max(1.0))
            .product();
        bound = bound.max(hadamard);
    }
    (bound.log(p as f64).ceil() as u32).max(1) + 1
}

fn unimodular<R: Rng>(rng: &mut R, n: usize, steps: usize) -> (Mat, Mat) {
    let mut u = zeros(n, n);
    let mut inv = zeros(n, n);
    for i in 0..n {
        u[i][i] = 1;
        inv[i][i] = 1;
    }
    if n < 2 {
        return (u, inv);
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c: i128 = if rng.gen_bool(0.5) { 1 } else { -1 };
        // u ← (I + c e_ij) u, inv ← inv (I − c e_ij)
        for col in 0..n {
            let add = c * u[j][col];
            u[i][col] += add;
        }
        for row in 0..n {
            let sub = c * inv[row][i];
            inv[row][j] -= sub;
        }
    }
    (u, inv)
}

/// The complex with one `Z → Z` of multiplication by `m` per `Z/m`, and one
/// `Z` per free summand, after a random change of basis in each degree.
pub fn presentation_complex<R: Rng>(g: &GradedAbelianGroup, rng: &mut R) -> IntegralChainComplex {
    let mut ranks: BTreeMap<i64, usize> = BTreeMap::new();
    let mut edges: Vec<(i64, usize, usize, i128)> = Vec::new();
    for (d, summands) in g.iter() {
        for c in summands {
            let low = *ranks.entry(d).or_insert(0);
            ranks.insert(d, low + 1);
            if let Cyclic::Torsion(m) = c {
                let high = *ranks.entry(d + 1).or_insert(0);
                ranks.insert(d + 1, high + 1);
                edges.push((d + 1, high, low, *m as i128));
            }
        }
    }
    let mut bases: BTreeMap<i64, (Mat, Mat)> = BTreeMap::new();
    for (&d, &n) in &ranks {
        bases.insert(d, unimodular(rng, n, 3 * n));
    }
    let mut boundaries = BTreeMap::new();
    for (&d, &n) in &ranks {
        let below = ranks.get(&(d - 1)).copied().unwrap_or(0);
        if below == 0 {
            continue;
        }
        let mut raw = zeros(below, n);
        for &(deg, col, row, m) in &edges {
            if deg == d {
                raw[row][col] = m;
            }
        }
        // ∂' = U_{d−1} ∂ U_d^{−1}
        let (u_below, _) = &bases[&(d - 1)];
        let (_, inv_here) = &bases[&d];
        let scrambled = mul(&mul(u_below, &raw, below, n), inv_here, n, n);
        boundaries.insert(d, from_mat(&scrambled, n));
    }
    IntegralChainComplex::new(ranks, boundaries).expect("a presentation complex")
}

/// Ranks at most 5 in degrees 0..=3, entries at most 9 in absolute value.
pub fn random_complex<R: Rng>(rng: &mut R) -> IntegralChainComplex {
    let ranks: Vec<usize> = (0..4).map(|_| rng.gen_range(0..=5)).collect();
    let mut mats: Vec<Mat> = Vec::new();
    // ∂_1 is unconstrained
    let mut d1 = zeros(ranks[0], ranks[1]);
    for row in d1.iter_mut() {
        for x in row.iter_mut() {
            if rng.gen_bool(0.6) {
                *x = rng.gen_range(-9..=9);
            }
        }
    }
    mats.push(d1);
    for m in 2..=3 {
        let prev = &mats[m - 2];
        let kernel = integer_kernel(prev, ranks[m - 1]);
        let mut d = zeros(ranks[m - 1], ranks[m]);
        for j in 0..ranks[m] {
            if kernel.is_empty() {
                break;
            }
            let scale: i128 = rng.gen_range(1..=4);
            let mut col = vec![0i128; ranks[m - 1]];
            for v in &kernel {
                let c: i128 = rng.gen_range(-1..=1);
                for (x, y) in col.iter_mut().zip(v) {
                    *x += scale * c * y;
                }
            }
            if col.iter().all(|x| x.abs() <= 9) {
                for i in 0..ranks[m - 1] {
                    d[i][j] = col[i];
                }
            }
        }
        mats.push(d);
    }
    let rank_map: BTreeMap<i64, usize> = ranks.iter().enumerate().map(|(i, &r)| (i as i64, r)).collect();
    let boundaries: BTreeMap<i64, Matrix<i64>> = mats
        .iter()
        .enumerate()
        .map(|(i, m)| ((i + 1) as i64, from_mat(m, ranks[i + 1])))
        .collect();
    IntegralChainComplex::new(rank_map, boundaries).expect("∂∂ = 0 by construction")
}

/// Up to three summands per degree, drawn from `Z`, `Z/p^k` with `k` in
/// `k_range`, and (when `prime_to_p`) a `Z/q` with `q` prime to `p`.
pub fn random_group<R: Rng>(
    rng: &mut R,
    p: u32,
    degrees: std::ops::RangeInclusive<i64>,
    k_range: std::ops::RangeInclusive<u32>,
    prime_to_p: bool,
) -> GradedAbelianGroup {
    let mut g = GradedAbelianGroup::new();
    for d in degrees {
        for _ in 0..rng.gen_range(0..=3) {
            if rng.gen_bool(0.55) {
                continue;
            }
            let c = match rng.gen_range(0..10) {
                0..=2 => Cyclic::Free,
                3 if prime_to_p => Cyclic::Torsion(if p == 7 { 2 } else { 7 }),
                _ => Cyclic::Torsion((p as u64).pow(rng.gen_range(k_range.clone()))),
            };
            g.push(d, c);
        }
    }
    g
}

/// `E_{r+1} = E_r − rank in − rank out` at every spot and `d ∘ d = 0`.
/// Returns the first violation.
pub fn bookkeeping<F: Field>(ss: &SpectralSequence<F>) -> Result<(), String> {
    let f = &ss.field;
    for (idx, (page, d)) in ss.pages.iter().enumerate() {
        for (src, m) in d.maps() {
            let tgt = d.target(src);
            if m.cols() != page.dim(src) || m.rows() != page.dim(tgt) {
                return Err(format!("d_{} at {src:?} has the wrong shape", d.r));
            }
            if let Some(next) = d.get(tgt) {
                if !next.mul(f, m).is_zero(f) {
                    return Err(format!("d_{} ∘ d_{} ≠ 0 at {src:?}", d.r, d.r));
                }
            }
        }
        let Some((next, _)) = ss.pages.get(idx + 1) else {
            continue;
        };
        let mut spots: Vec<_> = page.spots().map(|(s, _)| s).collect();
        spots.extend(next.spots().map(|(s, _)| s));
        for spot in spots {
            let out = d.get(spot).map_or(0, |m| m.rank(f));
            let back = (spot.0 - d.shift.0, spot.1 - d.shift.1);
            let inc = d.get(back).map_or(0, |m| m.rank(f));
            if page.dim(spot) < out + inc || next.dim(spot) != page.dim(spot) - out - inc {
                return Err(format!(
                    "E_{} at {spot:?}: {} − {inc} − {out} ≠ {}",
                    page.r,
                    page.dim(spot),
                    next.dim(spot)
                ));
            }
        }
    }
    Ok(())
}
