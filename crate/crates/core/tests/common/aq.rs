//! Brute-force and minimal-relation oracles for André–Quillen computations.

use num_rational::BigRational;
use num_traits::{One, Zero};
use ssalg::aq::{Algebra, AqEntry, CoefficientModule, Generator, GradedCommutativePresentation, Polynomial};
use ssalg::{Field, Matrix, Rationals};

pub fn q(n: i64) -> BigRational {
    Rationals.from_i64(n)
}

pub fn gens(degrees: &[u32]) -> Vec<Generator> {
    degrees
        .iter()
        .enumerate()
        .map(|(i, &d)| Generator {
            name: format!("x{i}"),
            degree: d,
        })
        .collect()
}

pub fn at(entries: &[AqEntry], e: i64) -> usize {
    entries.iter().find(|x| x.internal_degree == e).map_or(0, |x| x.dim)
}

/// Solves for every linear map `D: A_d → M_{d−e}` with `d ≤ n` satisfying the
/// Leibniz rule on all pairs of basis monomials.
pub fn brute_force_derivations(p: &GradedCommutativePresentation, m: &CoefficientModule, e: i64, n: i64) -> usize {
    let a = Algebra::new(p.clone());
    let r = m.target();
    let rp = r.presentation();
    let t = m.shift();
    let mut offsets = vec![0usize; (n + 2) as usize];
    for d in 1..=n {
        offsets[(d + 1) as usize] = offsets[d as usize] + a.dim(d) * m.dim(d - e);
    }
    let unknowns = offsets[(n + 1) as usize];
    let unit = |mono: &Vec<u32>| Polynomial::term(mono.clone(), BigRational::one());
    // the unknown for basis element k of A_d, component beta
    let var = |d: i64, k: usize, beta: usize| offsets[d as usize] + k * m.dim(d - e) + beta;
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for d1 in 1..=n {
        for d2 in 1..=n - d1 {
            let d = d1 + d2;
            let target_basis = r.dim(d - e + t);
            if target_basis == 0 {
                continue;
            }
            for (i, x) in a.basis(d1).iter().enumerate() {
                for (j, y) in a.basis(d2).iter().enumerate() {
                    let mut eq = vec![vec![BigRational::zero(); unknowns]; target_basis];
                    // D(xy)
                    let xy = p.multiply(&unit(x), &unit(y));
                    for (k, c) in a.reduce(d, &xy).into_iter().enumerate() {
                        for (beta, row) in eq.iter_mut().enumerate() {
                            row[var(d, k, beta)] += &c;
                        }
                    }
                    // − D(x)·y = −(−1)^{|y|(|x|−e)} f(y) D(x)
                    let s1 = if (d2 * (d1 - e)).rem_euclid(2) == 1 { q(1) } else { q(-1) };
                    let fy = m.apply(&unit(y));
                    for (beta, b) in r.basis(d1 - e + t).iter().enumerate() {
                        let prod = rp.multiply(&fy, &unit(b));
                        for (row, c) in r.reduce(d - e + t, &prod).into_iter().enumerate() {
                            eq[row][var(d1, i, beta)] += &c * &s1;
                        }
                    }
                    // − (−1)^{e|x|} f(x) D(y)
                    let s2 = if (e * d1).rem_euclid(2) == 1 { q(1) } else { q(-1) };
                    let fx = m.apply(&unit(x));
                    for (beta, b) in r.basis(d2 - e + t).iter().enumerate() {
                        let prod = rp.multiply(&fx, &unit(b));
                        for (row, c) in r.reduce(d - e + t, &prod).into_iter().enumerate() {
                            eq[row][var(d2, j, beta)] += &c * &s2;
                        }
                    }
                    rows.extend(eq);
                }
            }
        }
    }
    if rows.is_empty() {
        return unknowns;
    }
    unknowns - Matrix::from_rows(rows, unknowns).rank(&Rationals)
}

/// `dim (I / 𝔪I)_e`: minimal relations in degree `e`.
pub fn minimal_relations(p: &GradedCommutativePresentation, e: u32) -> usize {
    let monos = p.monomials(e);
    let index = |m: &Vec<u32>| monos.iter().position(|x| x == m).unwrap();
    let span = |min_mult: u32| {
        let mut cols = Vec::new();
        for r in p.relations() {
            let dr = p.homogeneous_degree(r).unwrap();
            if dr > e || e - dr < min_mult {
                continue;
            }
            for mm in p.monomials(e - dr) {
                let prod = p.multiply(&Polynomial::term(mm, BigRational::one()), r);
                let mut v = vec![BigRational::zero(); monos.len()];
                for (x, c) in prod.terms() {
                    v[index(x)] += c;
                }
                cols.push(v);
            }
        }
        Matrix::from_columns(monos.len(), &cols, BigRational::zero()).rank(&Rationals)
    };
    span(0) - span(1)
}

pub fn random_relation(p: &GradedCommutativePresentation, degree: u32, coeffs: &[i64]) -> Polynomial {
    let mut r = Polynomial::zero();
    for (m, &c) in p.monomials(degree).into_iter().zip(coeffs.iter().cycle()) {
        r.add_term(m, q(c));
    }
    r
}

pub fn build(degrees: &[u32], rels: &[(u32, Vec<i64>)], decomposable: bool) -> GradedCommutativePresentation {
    let free = GradedCommutativePresentation::free(gens(degrees)).unwrap();
    let relations = rels
        .iter()
        .map(|(d, c)| {
            let r = random_relation(&free, *d, c);
            if !decomposable {
                return r;
            }
            // drop linear terms so the relation lies in 𝔪²
            let mut s = Polynomial::zero();
            for (m, c) in r.terms() {
                if m.iter().sum::<u32>() >= 2 {
                    s.add_term(m.clone(), c.clone());
                }
            }
            s
        })
        .collect();
    GradedCommutativePresentation::new(gens(degrees), relations).unwrap()
}

pub fn identity_images(p: &GradedCommutativePresentation) -> Vec<Polynomial> {
    (0..p.generators().len())
        .map(|i| Polynomial::term(p.generator_monomial(i, 1), BigRational::one()))
        .collect()
}
