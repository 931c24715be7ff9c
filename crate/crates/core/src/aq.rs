//! André–Quillen cohomology of graded-commutative `Q`-algebras in degrees 0
//! and 1, and the genus-lifting report.
//!
//! Everything is computed degreewise with exact rationals. An algebra is a
//! presentation `Q[x_1, …, x_n] / (r_1, …, r_m)`; odd generators anticommute
//! and square to zero. Coefficients are `M = Σ^t R`, an `R`-module pulled
//! back along an algebra map `f: A → R`, so `M_k = R_{k+t}`.
//!
//! Sign conventions: `M` is a graded module with `m · a = (−1)^{|a||m|} a · m`
//! and `a · m = f(a) m`. A derivation of internal degree `e` lowers degree by
//! `e` and satisfies `D(ab) = D(a) b + (−1)^{e|a|} a D(b)`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::matrix::{Matrix, Quotient};

/// Exponent vector over a fixed generator list.
pub type Monomial = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

/// A polynomial as a map from monomials to nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn term(monomial: Monomial, c: BigRational) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(monomial, c);
        p
    }

    pub fn add_term(&mut self, monomial: Monomial, c: BigRational) {
        let entry = self.terms.entry(monomial).or_insert_with(BigRational::zero);
        *entry += c;
        self.terms.retain(|_, v| !v.is_zero());
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    fn scaled(&self, c: &BigRational) -> Self {
        let mut p = Polynomial::zero();
        for (m, v) in &self.terms {
            p.add_term(m.clone(), v * c);
        }
        p
    }

    fn plus(&mut self, other: &Polynomial) {
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v.clone());
        }
    }
}

/// A graded-commutative presentation over `Q`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedCommutativePresentation {
    generators: Vec<Generator>,
    relations: Vec<Polynomial>,
    /// Marks a source whose `π_0` is `Z/2`; such an algebra admits no map to a
    /// `Q`-algebra.
    pi0_z2: bool,
}

impl GradedCommutativePresentation {
    pub fn new(generators: Vec<Generator>, relations: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if g.degree == 0 {
                return Err(Error::InvalidArgument(format!(
                    "generator {} has degree 0; only positive degrees are degreewise finite",
                    g.name
                )));
            }
        }
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::InvalidArgument(format!("duplicate generator {}", g.name)));
            }
        }
        let p = GradedCommutativePresentation {
            generators,
            relations: Vec::new(),
            pi0_z2: false,
        };
        let mut normalized = Vec::new();
        for (j, r) in relations.iter().enumerate() {
            let mut q = Polynomial::zero();
            for (m, c) in r.terms() {
                if m.len() != p.generators.len() {
                    return Err(Error::ShapeMismatch(format!("relation {j} has a malformed monomial")));
                }
                if let Some((m, neg)) = p.normalize(m) {
                    q.add_term(m, if neg { -c.clone() } else { c.clone() });
                }
            }
            if p.homogeneous_degree(&q).is_none() {
                return Err(Error::InconsistentPresentation(format!("relation {j} is not homogeneous")));
            }
            if !q.is_zero() {
                normalized.push(q);
            }
        }
        Ok(GradedCommutativePresentation {
            relations: normalized,
            ..p
        })
    }

    /// The free algebra on `generators`.
    pub fn free(generators: Vec<Generator>) -> Result<Self> {
        Self::new(generators, Vec::new())
    }

    /// `Q` itself.
    pub fn rationals() -> Self {
        GradedCommutativePresentation {
            generators: Vec::new(),
            relations: Vec::new(),
            pi0_z2: false,
        }
    }

    pub fn with_pi0_z2(mut self, flag: bool) -> Self {
        self.pi0_z2 = flag;
        self
    }

    pub fn pi0_z2(&self) -> bool {
        self.pi0_z2
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn is_free(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn max_relation_degree(&self) -> u32 {
        self.relations.iter().filter_map(|r| self.homogeneous_degree(r)).max().unwrap_or(0)
    }

    fn parity(&self, i: usize) -> bool {
        self.generators[i].degree % 2 == 1
    }

    pub fn monomial_degree(&self, m: &[u32]) -> u32 {
        m.iter().zip(&self.generators).map(|(e, g)| e * g.degree).sum()
    }

    /// Degree of a homogeneous polynomial; `Some(0)` for zero, `None` if mixed.
    pub fn homogeneous_degree(&self, p: &Polynomial) -> Option<u32> {
        let mut degs = p.terms().map(|(m, _)| self.monomial_degree(m));
        let first = degs.next().unwrap_or(0);
        degs.all(|d| d == first).then_some(first)
    }

    /// Odd generators square to zero.
    fn normalize(&self, m: &[u32]) -> Option<(Monomial, bool)> {
        (0..m.len()).all(|i| !self.parity(i) || m[i] <= 1).then(|| (m.to_vec(), false))
    }

    /// `a · b` with its Koszul sign; `None` if an odd generator repeats.
    pub fn multiply_monomials(&self, a: &[u32], b: &[u32]) -> Option<(Monomial, bool)> {
        let mut neg = false;
        let mut out = Vec::with_capacity(a.len());
        for j in 0..a.len() {
            if self.parity(j) {
                if a[j] + b[j] > 1 {
                    return None;
                }
                if b[j] == 1 {
                    let passed: u32 = (j + 1..a.len()).filter(|&i| self.parity(i)).map(|i| a[i]).sum();
                    neg ^= passed % 2 == 1;
                }
            }
            out.push(a[j] + b[j]);
        }
        Some((out, neg))
    }

    pub fn multiply(&self, p: &Polynomial, q: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, c) in p.terms() {
            for (b, d) in q.terms() {
                if let Some((m, neg)) = self.multiply_monomials(a, b) {
                    let v = c * d;
                    out.add_term(m, if neg { -v } else { v });
                }
            }
        }
        out
    }

    /// All monomials of degree `d`.
    pub fn monomials(&self, d: u32) -> Vec<Monomial> {
        fn rec(p: &GradedCommutativePresentation, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i == p.generators.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let g = p.generators[i].degree;
            let max = if p.parity(i) { 1.min(left / g) } else { left / g };
            for e in (0..=max).rev() {
                cur.push(e);
                rec(p, i + 1, left - e * g, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(self, 0, d, &mut Vec::new(), &mut out);
        out
    }

    pub fn generator_monomial(&self, i: usize, power: u32) -> Monomial {
        let mut m = vec![0; self.generators.len()];
        m[i] = power;
        m
    }

    fn index_of(&self, name: &str) -> Result<usize> {
        self.generators
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown generator {name}")))
    }
}

/// One graded piece of a presented algebra: a monomial basis of the quotient.
struct Piece {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    quotient: Quotient<Rationals>,
    basis: Vec<Monomial>,
}

impl Piece {
    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn vector(&self, p: &Polynomial) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.monomials.len()];
        for (m, c) in p.terms() {
            v[self.index[m]] += c;
        }
        v
    }

    /// Coordinates of a homogeneous polynomial of this degree in the quotient.
    fn reduce(&self, p: &Polynomial) -> Vec<BigRational> {
        self.quotient.coordinates(&self.vector(p)).expect("every polynomial lies in the ambient space")
    }
}

/// A presented algebra with its graded pieces computed on demand.
pub struct Algebra {
    pres: GradedCommutativePresentation,
    pieces: RefCell<BTreeMap<u32, Rc<Piece>>>,
}

impl Algebra {
    pub fn new(pres: GradedCommutativePresentation) -> Self {
        Algebra {
            pres,
            pieces: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn presentation(&self) -> &GradedCommutativePresentation {
        &self.pres
    }

    /// `span{ m · r }` inside the degree-`d` monomials.
    fn ideal_vectors(&self, d: u32, products: usize) -> Vec<Vec<BigRational>> {
        let p = &self.pres;
        let monomials = p.monomials(d);
        let index: HashMap<&Monomial, usize> = monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut gens: Vec<(Polynomial, u32)> = p
            .relations
            .iter()
            .map(|r| (r.clone(), p.homogeneous_degree(r).unwrap_or(0)))
            .collect();
        for _ in 1..products {
            let mut next = Vec::new();
            for (g, dg) in &gens {
                for r in &p.relations {
                    let dr = p.homogeneous_degree(r).unwrap_or(0);
                    next.push((p.multiply(g, r), dg + dr));
                }
            }
            gens = next;
        }
        let mut out = Vec::new();
        for (g, dg) in &gens {
            if *dg > d {
                continue;
            }
            for m in p.monomials(d - dg) {
                let prod = p.multiply(&Polynomial::term(m, BigRational::one()), g);
                let mut v = vec![BigRational::zero(); monomials.len()];
                for (mm, c) in prod.terms() {
                    v[index[mm]] += c;
                }
                out.push(v);
            }
        }
        out
    }

    fn piece(&self, d: u32) -> Rc<Piece> {
        if let Some(p) = self.pieces.borrow().get(&d) {
            return p.clone();
        }
        let monomials = self.pres.monomials(d);
        let n = monomials.len();
        let ideal = Matrix::from_columns(n, &self.ideal_vectors(d, 1), BigRational::zero());
        let quotient = Quotient::new(&Rationals, &Matrix::identity(&Rationals, n), &ideal);
        let basis = quotient.chosen.iter().map(|&j| monomials[j].clone()).collect();
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let piece = Rc::new(Piece {
            monomials,
            index,
            quotient,
            basis,
        });
        self.pieces.borrow_mut().insert(d, piece.clone());
        piece
    }

    /// `dim A_d`; zero in negative degrees.
    pub fn dim(&self, d: i64) -> usize {
        if d < 0 {
            0
        } else {
            self.piece(d as u32).dim()
        }
    }

    /// Monomial basis of `A_d`.
    pub fn basis(&self, d: i64) -> Vec<Monomial> {
        if d < 0 {
            Vec::new()
        } else {
            self.piece(d as u32).basis.clone()
        }
    }

    /// Coordinates of a homogeneous polynomial of degree `d` in `A_d`.
    pub fn reduce(&self, d: i64, p: &Polynomial) -> Vec<BigRational> {
        if d < 0 {
            assert!(p.is_zero(), "nonzero polynomial in negative degree");
            return Vec::new();
        }
        self.piece(d as u32).reduce(p)
    }

    /// Whether a homogeneous polynomial of degree `d` vanishes in `A`.
    pub fn is_zero_in(&self, d: i64, p: &Polynomial) -> bool {
        self.reduce(d, p).iter().all(Zero::is_zero)
    }
}

/// `M = Σ^t R` over `A` via `f: A → R`.
pub struct CoefficientModule {
    target: Algebra,
    /// `f(x_i)` as polynomials in the target's generators.
    images: Vec<Polynomial>,
    shift: i64,
}

impl CoefficientModule {
    /// Validates that `f` is degree-preserving and kills the relations of `source`.
    pub fn new(
        source: &GradedCommutativePresentation,
        target: GradedCommutativePresentation,
        images: Vec<Polynomial>,
        shift: i64,
    ) -> Result<Self> {
        if images.len() != source.generators.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} images for {} generators",
                images.len(),
                source.generators.len()
            )));
        }
        for (g, im) in source.generators.iter().zip(&images) {
            if im.terms().any(|(m, _)| m.len() != target.generators.len() || target.monomial_degree(m) != g.degree) {
                return Err(Error::InvalidArgument(format!(
                    "image of {} is not homogeneous of degree {}",
                    g.name, g.degree
                )));
            }
        }
        let module = CoefficientModule {
            target: Algebra::new(target),
            images,
            shift,
        };
        for (j, r) in source.relations.iter().enumerate() {
            let d = source.homogeneous_degree(r).unwrap_or(0);
            if !module.target.is_zero_in(d as i64, &module.apply(r)) {
                return Err(Error::InconsistentPresentation(format!(
                    "the algebra map does not kill relation {j}"
                )));
            }
        }
        Ok(module)
    }

    /// The augmentation-style module: every generator maps to zero.
    pub fn zero_map(source: &GradedCommutativePresentation, target: GradedCommutativePresentation, shift: i64) -> Result<Self> {
        let images = vec![Polynomial::zero(); source.generators.len()];
        Self::new(source, target, images, shift)
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn target(&self) -> &Algebra {
        &self.target
    }

    /// `dim M_k = dim R_{k+t}`.
    pub fn dim(&self, k: i64) -> usize {
        self.target.dim(k + self.shift)
    }

    fn apply_monomial(&self, m: &[u32]) -> Polynomial {
        let t = &self.target.pres;
        let mut acc = Polynomial::term(vec![0; t.generators.len()], BigRational::one());
        for (i, &e) in m.iter().enumerate() {
            for _ in 0..e {
                acc = t.multiply(&acc, &self.images[i]);
            }
        }
        acc
    }

    /// `f(p)` for a polynomial in the source generators.
    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in p.terms() {
            out.plus(&self.apply_monomial(m).scaled(c));
        }
        out
    }
}

fn sign(neg: bool) -> BigRational {
    if neg {
        -BigRational::one()
    } else {
        BigRational::one()
    }
}

/// The generators of a monomial as an ordered list of indices.
fn letters(m: &[u32]) -> Vec<usize> {
    m.iter().enumerate().flat_map(|(i, &e)| std::iter::repeat(i).take(e as usize)).collect()
}

/// Dimension report in one internal degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AqEntry {
    pub internal_degree: i64,
    pub dim: usize,
    /// False inside the guard band near the degree bound.
    pub reliable: bool,
}

/// The naive cotangent complex dualized into `M`, in one internal degree.
pub struct NaiveCotangentData {
    pub internal_degree: i64,
    /// Values on generators: `⊕_i M_{|x_i| − e}`.
    pub cochains0: usize,
    /// `Hom_A(I/I², M)_e`, as a basis inside `⊕_j M_{|r_j| − e}`.
    pub cochains1: Matrix<BigRational>,
    /// `δ: C^0 → ⊕_j M_{|r_j| − e}`.
    pub delta: Matrix<BigRational>,
}

impl NaiveCotangentData {
    pub fn aq0(&self) -> usize {
        self.cochains0 - self.delta.rank(&Rationals)
    }

    pub fn aq1(&self) -> usize {
        self.cochains1.cols() - self.delta.rank(&Rationals)
    }
}

/// Computes the dual naive cotangent complex of `a` with coefficients `m` in
/// internal degree `e`, using syzygies up to degree `bound`.
pub fn naive_cotangent(a: &Algebra, m: &CoefficientModule, e: i64, bound: u32) -> NaiveCotangentData {
    let p = &a.pres;
    let r = &m.target;
    let t = m.shift;
    let gen_deg = |i: usize| p.generators[i].degree as i64;
    // offsets of the unknowns v_i ∈ M_{|x_i| − e}
    let mut v_off = vec![0];
    for i in 0..p.generators.len() {
        v_off.push(v_off[i] + m.dim(gen_deg(i) - e));
    }
    let rel_deg: Vec<i64> = p.relations.iter().map(|x| p.homogeneous_degree(x).unwrap_or(0) as i64).collect();
    let mut w_off = vec![0];
    for (j, &d) in rel_deg.iter().enumerate() {
        w_off.push(w_off[j] + m.dim(d - e));
    }
    let f = |poly: &Polynomial| m.apply(poly);
    // D(x_{i_1} ⋯ x_{i_k}) with D(x_i) = b, as a polynomial in R
    let derive = |mono: &[u32], gen: usize, b: &Monomial| -> Polynomial {
        let word = letters(mono);
        let mut out = Polynomial::zero();
        for (k, &letter) in word.iter().enumerate() {
            if letter != gen {
                continue;
            }
            let deg_of = |s: &[usize]| s.iter().map(|&i| gen_deg(i)).sum::<i64>();
            let prefix = &word[..k];
            let suffix = &word[k + 1..];
            let neg = (e * deg_of(prefix) + deg_of(suffix) * (gen_deg(letter) - e)).rem_euclid(2) == 1;
            let mono_of = |s: &[usize]| {
                let mut mm = vec![0; p.generators.len()];
                for &i in s {
                    mm[i] += 1;
                }
                mm
            };
            let fp = f(&Polynomial::term(mono_of(prefix), BigRational::one()));
            let fs = f(&Polynomial::term(mono_of(suffix), BigRational::one()));
            let prod = r.pres.multiply(&r.pres.multiply(&fp, &fs), &Polynomial::term(b.clone(), BigRational::one()));
            out.plus(&prod.scaled(&sign(neg)));
        }
        out
    };
    let cols0 = v_off[p.generators.len()];
    let rows1 = w_off[rel_deg.len()];
    let mut delta = Matrix::zeros(&Rationals, rows1, cols0);
    for i in 0..p.generators.len() {
        let basis = r.basis(gen_deg(i) - e + t);
        for (bi, b) in basis.iter().enumerate() {
            for (j, rel) in p.relations.iter().enumerate() {
                let mut dr = Polynomial::zero();
                for (mono, c) in rel.terms() {
                    dr.plus(&derive(mono, i, b).scaled(c));
                }
                let coords = r.reduce(rel_deg[j] - e + t, &dr);
                for (k, x) in coords.into_iter().enumerate() {
                    delta[(w_off[j] + k, v_off[i] + bi)] = x;
                }
            }
        }
    }
    // constraints on w from syzygies (a_j) with Σ a_j r_j ∈ I²
    let mut constraints: Vec<Vec<BigRational>> = Vec::new();
    for d in rel_deg.iter().copied().min().unwrap_or(0)..=bound as i64 {
        let target = r.dim(d - e + t);
        if target == 0 {
            continue;
        }
        let monos = p.monomials(d as u32);
        let n = monos.len();
        // columns: (j, monomial a of degree d − |r_j|), then generators of I²_d
        let mut cols: Vec<Vec<BigRational>> = Vec::new();
        let mut labels: Vec<(usize, Monomial)> = Vec::new();
        let index: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, mm)| (mm, i)).collect();
        for (j, rel) in p.relations.iter().enumerate() {
            if rel_deg[j] > d {
                continue;
            }
            for am in p.monomials((d - rel_deg[j]) as u32) {
                let prod = p.multiply(&Polynomial::term(am.clone(), BigRational::one()), rel);
                let mut v = vec![BigRational::zero(); n];
                for (mm, c) in prod.terms() {
                    v[index[mm]] += c;
                }
                cols.push(v);
                labels.push((j, am));
            }
        }
        if labels.is_empty() {
            continue;
        }
        let squares = a.ideal_vectors(d as u32, 2);
        let k = labels.len();
        let mut all = cols;
        all.extend(squares.into_iter().map(|v| v.into_iter().map(|x| -x).collect()));
        let kernel = Matrix::from_columns(n, &all, BigRational::zero()).kernel(&Rationals);
        for s in 0..kernel.cols() {
            // the constraint Σ_j (−1)^{e|a_j|} f(a_j) w_j = 0 in M_{d − e}
            let mut rows = vec![vec![BigRational::zero(); rows1]; target];
            let mut nonzero = false;
            for (idx, (j, am)) in labels.iter().enumerate().take(k) {
                let c = &kernel[(idx, s)];
                if c.is_zero() {
                    continue;
                }
                let a_deg = p.monomial_degree(am) as i64;
                let fa = f(&Polynomial::term(am.clone(), BigRational::one())).scaled(&(c * sign((e * a_deg).rem_euclid(2) == 1)));
                for (bi, b) in r.basis(rel_deg[*j] - e + t).iter().enumerate() {
                    let prod = r.pres.multiply(&fa, &Polynomial::term(b.clone(), BigRational::one()));
                    for (row, x) in r.reduce(d - e + t, &prod).into_iter().enumerate() {
                        if !x.is_zero() {
                            nonzero = true;
                            rows[row][w_off[*j] + bi] += x;
                        }
                    }
                }
            }
            if nonzero {
                constraints.extend(rows);
            }
        }
    }
    let cochains1 = if constraints.is_empty() {
        Matrix::identity(&Rationals, rows1)
    } else {
        Matrix::from_rows(constraints, rows1).kernel(&Rationals)
    };
    assert!(
        crate::matrix::contains(&Rationals, &cochains1, &delta),
        "the image of δ violates a syzygy constraint"
    );
    NaiveCotangentData {
        internal_degree: e,
        cochains0: cols0,
        cochains1,
        delta,
    }
}

/// Internal degrees where `C^0` or `C^1` can be nonzero within the bound.
fn degree_window(p: &GradedCommutativePresentation, m: &CoefficientModule, bound: u32) -> Vec<i64> {
    let t = m.shift;
    let degs: Vec<i64> = p
        .generators
        .iter()
        .map(|g| g.degree as i64)
        .chain(p.relations.iter().map(|r| p.homogeneous_degree(r).unwrap_or(0) as i64))
        .filter(|&d| d <= bound as i64)
        .collect();
    let Some(&max) = degs.iter().max() else {
        return Vec::new();
    };
    let min = *degs.iter().min().expect("nonempty");
    ((min + t - bound as i64)..=(max + t)).collect()
}

/// Every target degree touched in internal degree `e` stays below the guard band.
fn reliable(p: &GradedCommutativePresentation, m: &CoefficientModule, e: i64, bound: u32) -> bool {
    let guard = bound as i64 - p.max_relation_degree() as i64;
    let t = m.shift;
    p.generators
        .iter()
        .map(|g| g.degree as i64)
        .chain(p.relations.iter().map(|r| p.homogeneous_degree(r).unwrap_or(0) as i64))
        .all(|d| d - e + t <= guard || m.dim(d - e) == 0)
}

fn check_bound(p: &GradedCommutativePresentation, bound: u32) -> Result<()> {
    if p.max_relation_degree() > bound {
        return Err(Error::InvalidArgument(format!(
            "degree bound {bound} is below a relation of degree {}",
            p.max_relation_degree()
        )));
    }
    Ok(())
}

/// `AQ^0`: graded `f`-derivations `A → M`, per internal degree.
pub fn derivations(p: &GradedCommutativePresentation, m: &CoefficientModule, bound: u32) -> Result<Vec<AqEntry>> {
    check_bound(p, bound)?;
    let a = Algebra::new(p.clone());
    Ok(degree_window(p, m, bound)
        .into_iter()
        .map(|e| AqEntry {
            internal_degree: e,
            dim: naive_cotangent(&a, m, e, bound).aq0(),
            reliable: reliable(p, m, e, bound),
        })
        .collect())
}

/// `AQ^1` from the naive cotangent complex, per internal degree.
pub fn aq_one(p: &GradedCommutativePresentation, m: &CoefficientModule, bound: u32) -> Result<Vec<AqEntry>> {
    check_bound(p, bound)?;
    let a = Algebra::new(p.clone());
    Ok(degree_window(p, m, bound)
        .into_iter()
        .map(|e| AqEntry {
            internal_degree: e,
            dim: naive_cotangent(&a, m, e, bound).aq1(),
            reliable: reliable(p, m, e, bound),
        })
        .collect())
}

/// One free parameter block of an algebra map out of a free algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomParameter {
    pub generator: String,
    pub degree: u32,
    /// Dimension of the target in that degree.
    pub dim: usize,
}

/// Algebra maps out of a free algebra: one point of `R_{|x_i|}` per generator.
pub fn algebra_hom_parametrization(
    source: &GradedCommutativePresentation,
    target: &GradedCommutativePresentation,
    bound: u32,
) -> Result<Vec<HomParameter>> {
    if !source.is_free() {
        return Err(Error::Unsupported("hom-sets are only parametrized for free sources".into()));
    }
    let r = Algebra::new(target.clone());
    Ok(source
        .generators
        .iter()
        .filter(|g| g.degree <= bound)
        .map(|g| HomParameter {
            generator: g.name.clone(),
            degree: g.degree,
            dim: r.dim(g.degree as i64),
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenusConclusion {
    ExistsAndUnique,
    Vacuous,
}

impl fmt::Display for GenusConclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenusConclusion::ExistsAndUnique => {
                write!(f, "lift exists and unique up to homotopy through E-infinity ring maps")
            }
            GenusConclusion::Vacuous => write!(f, "pi_0 = Z/2: no maps to a Q-algebra; vacuously true"),
        }
    }
}

/// `AQ^1(A; Σ^t R)` across internal degrees for one suspension `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionGroup {
    pub t: i64,
    pub aq_one: Vec<AqEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusReport {
    pub conclusion: GenusConclusion,
    pub message: String,
    pub hom_parameters: Vec<HomParameter>,
    /// Every verified obstruction group, all zero when the conclusion is
    /// `ExistsAndUnique`.
    pub obstruction_groups: Vec<ObstructionGroup>,
    /// `dim AQ^0(A; Σ^t R)` in internal degree 0: the 0-line of `E_2`.
    pub zero_line: Vec<(i64, usize)>,
    pub notes: Vec<String>,
}

/// The genus-lifting report for a free source and a degree-respecting
/// assignment `φ` on generators.
pub fn genus_lift_report(
    source: &GradedCommutativePresentation,
    target: &GradedCommutativePresentation,
    assignment: &[Polynomial],
    bound: u32,
) -> Result<GenusReport> {
    if source.pi0_z2 {
        return Ok(GenusReport {
            conclusion: GenusConclusion::Vacuous,
            message: GenusConclusion::Vacuous.to_string(),
            hom_parameters: Vec::new(),
            obstruction_groups: Vec::new(),
            zero_line: Vec::new(),
            notes: vec!["the source is a Z/2-algebra, so the set of genera is empty".into()],
        });
    }
    if !source.is_free() {
        return Err(Error::Unsupported("the genus report needs a free source".into()));
    }
    let hom_parameters = algebra_hom_parametrization(source, target, bound)?;
    let mut obstruction_groups = Vec::new();
    let mut zero_line = Vec::new();
    for t in 0..=bound as i64 {
        let m = CoefficientModule::new(source, target.clone(), assignment.to_vec(), t)?;
        let groups = aq_one(source, &m, bound)?;
        let a = Algebra::new(source.clone());
        zero_line.push((t, naive_cotangent(&a, &m, 0, bound).aq0()));
        obstruction_groups.push(ObstructionGroup { t, aq_one: groups });
    }
    let vanish = obstruction_groups.iter().all(|g| g.aq_one.iter().all(|x| x.dim == 0));
    assert!(vanish, "a free presentation produced nonzero AQ^1");
    Ok(GenusReport {
        conclusion: GenusConclusion::ExistsAndUnique,
        message: GenusConclusion::ExistsAndUnique.to_string(),
        hom_parameters,
        obstruction_groups,
        zero_line,
        notes: vec![
            "AQ^1 verified zero for every coefficient module Σ^t R with t ≤ the bound".into(),
            "AQ^s for s ≥ 2 vanishes because the source is free".into(),
            "E_2 is concentrated on the 0-line, so E_2 = E_∞ and the Hurewicz map to Comm(π_* MG, R_*) is a bijection".into(),
            "homotopy classes of E-infinity maps and H-infinity maps are in bijection".into(),
            "the conclusion concerns the chosen E-infinity structure HR with π_* HR = R_*".into(),
        ],
    })
}

/// JSON form of a polynomial term: a rational coefficient and generator powers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermSpec {
    pub coefficient: CoefficientSpec,
    #[serde(default)]
    pub powers: BTreeMap<String, u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoefficientSpec {
    Integer(i64),
    Text(String),
}

impl CoefficientSpec {
    fn value(&self) -> Result<BigRational> {
        match self {
            CoefficientSpec::Integer(n) => Ok(Rationals.from_i64(*n)),
            CoefficientSpec::Text(s) => BigRational::from_str(s.trim())
                .map_err(|_| Error::InvalidArgument(format!("bad rational coefficient {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationSpec {
    pub generators: Vec<Generator>,
    #[serde(default)]
    pub relations: Vec<Vec<TermSpec>>,
    #[serde(default)]
    pub pi0_z2: bool,
}

impl GradedCommutativePresentation {
    /// Reads a polynomial whose powers name generators of `self`.
    pub fn polynomial(&self, terms: &[TermSpec]) -> Result<Polynomial> {
        let mut p = Polynomial::zero();
        for t in terms {
            let mut m = vec![0; self.generators.len()];
            for (name, &e) in &t.powers {
                m[self.index_of(name)?] += e;
            }
            if let Some((m, neg)) = self.normalize(&m) {
                let c = t.coefficient.value()?;
                p.add_term(m, if neg { -c } else { c });
            }
        }
        Ok(p)
    }
}

impl TryFrom<&PresentationSpec> for GradedCommutativePresentation {
    type Error = Error;

    fn try_from(spec: &PresentationSpec) -> Result<Self> {
        let bare = GradedCommutativePresentation::free(spec.generators.clone())?;
        let relations = spec
            .relations
            .iter()
            .map(|r| bare.polynomial(r))
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedCommutativePresentation::new(spec.generators.clone(), relations)?.with_pi0_z2(spec.pi0_z2))
    }
}
