//! The mod-`p` Steenrod algebra in the admissible (Cartan-Serre) basis.
//!
//! Words are read left to right and act on module elements with the
//! rightmost letter applied first, so `β·w` prepends on the left.
//!
//! At `p = 2` a word is a sequence `Sq^{i_1} ⋯ Sq^{i_k}`, admissible when
//! `i_j ≥ 2 i_{j+1}`. At odd `p` it is `β^{ε_0} P^{s_1} β^{ε_1} ⋯ P^{s_k} β^{ε_k}`,
//! admissible when `s_j ≥ p s_{j+1} + ε_j`. Full Adem normalization is only
//! implemented at `p = 2`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{is_prime, Field, Fp};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Prime(u32);

impl Prime {
    pub const TWO: Prime = Prime(2);

    pub fn new(p: u32) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn field(self) -> Fp {
        Fp::new(self.0).expect("Prime holds a prime")
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An admissible monomial.
///
/// The exponent sequence is `(i_1, …, i_k)` at `p = 2` and
/// `(ε_0, s_1, ε_1, …, s_k, ε_k)` at odd `p`; the empty word has the empty
/// sequence in both cases.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AdmissibleWord {
    prime: Prime,
    seq: Vec<u32>,
}

impl AdmissibleWord {
    pub fn unit(prime: Prime) -> Self {
        AdmissibleWord { prime, seq: Vec::new() }
    }

    /// `Sq^{i_1} ⋯ Sq^{i_k}`; rejects inadmissible or zero exponents.
    pub fn sq(exponents: &[u32]) -> Result<Self> {
        if exponents.contains(&0) {
            return Err(Error::InvalidArgument("Sq^0 is not a letter of an admissible word".into()));
        }
        if !exponents.windows(2).all(|w| w[0] >= 2 * w[1]) {
            return Err(Error::InvalidArgument(format!("{exponents:?} is not admissible")));
        }
        Ok(AdmissibleWord {
            prime: Prime::TWO,
            seq: exponents.to_vec(),
        })
    }

    /// `β^{ε_0} P^{s_1} β^{ε_1} ⋯ P^{s_k} β^{ε_k}` at an odd prime.
    ///
    /// `bocksteins` has one more entry than `powers`.
    pub fn odd(prime: Prime, bocksteins: &[bool], powers: &[u32]) -> Result<Self> {
        if prime.value() == 2 {
            return Err(Error::InvalidArgument("use AdmissibleWord::sq at p = 2".into()));
        }
        if bocksteins.len() != powers.len() + 1 {
            return Err(Error::InvalidArgument(
                "an odd-primary word needs one more Bockstein slot than reduced powers".into(),
            ));
        }
        if powers.contains(&0) {
            return Err(Error::InvalidArgument("P^0 is not a letter of an admissible word".into()));
        }
        let p = prime.value();
        for j in 0..powers.len().saturating_sub(1) {
            if powers[j] < p * powers[j + 1] + bocksteins[j + 1] as u32 {
                return Err(Error::InvalidArgument(format!(
                    "P^{} followed by P^{} violates admissibility",
                    powers[j],
                    powers[j + 1]
                )));
            }
        }
        if powers.is_empty() && !bocksteins[0] {
            return Ok(AdmissibleWord::unit(prime));
        }
        let mut seq = vec![bocksteins[0] as u32];
        for (s, e) in powers.iter().zip(&bocksteins[1..]) {
            seq.push(*s);
            seq.push(*e as u32);
        }
        Ok(AdmissibleWord { prime, seq })
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn is_unit(&self) -> bool {
        self.seq.is_empty()
    }

    /// Exponent sequence as documented on the type.
    pub fn sequence(&self) -> &[u32] {
        &self.seq
    }

    fn is_odd(&self) -> bool {
        self.prime.value() != 2
    }

    /// Number of reduced powers (odd `p`) or squares (`p = 2`).
    pub fn length(&self) -> usize {
        if self.is_odd() {
            self.seq.len() / 2
        } else {
            self.seq.len()
        }
    }

    pub fn degree(&self) -> u32 {
        if self.is_odd() {
            let q = 2 * (self.prime.value() - 1);
            self.seq
                .iter()
                .enumerate()
                .map(|(i, &x)| if i % 2 == 0 { x } else { q * x })
                .sum()
        } else {
            self.seq.iter().sum()
        }
    }

    /// `i_1 − (i_2 + ⋯ + i_k)` at `p = 2`; `2 s_1 + ε_0 − |β^{ε_1} P^{s_2} ⋯|`
    /// at odd `p`.
    pub fn excess(&self) -> u32 {
        if self.seq.is_empty() {
            return 0;
        }
        if self.is_odd() {
            let lead = if self.seq.len() == 1 {
                self.seq[0]
            } else {
                2 * self.seq[1] + self.seq[0]
            };
            let tail = AdmissibleWord {
                prime: self.prime,
                seq: self.seq.get(2..).map_or(Vec::new(), |t| t.to_vec()),
            }
            .degree();
            lead - tail
        } else {
            self.seq[0] - self.seq[1..].iter().sum::<u32>()
        }
    }

    /// Whether the rightmost letter (applied first) is the Bockstein
    /// (`Sq^1` or `β`).
    pub fn ends_with_bockstein(&self) -> bool {
        self.seq.last() == Some(&1)
    }

    /// Whether the leftmost letter is the Bockstein.
    pub fn starts_with_bockstein(&self) -> bool {
        self.seq.first() == Some(&1)
    }

    fn sort_key(&self) -> &[u32] {
        &self.seq
    }
}

/// Words of one degree list in descending lexicographic order of exponent
/// sequences (`Sq^3` before `Sq^2 Sq^1`).
impl Ord for AdmissibleWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.prime
            .cmp(&other.prime)
            .then_with(|| other.sort_key().cmp(self.sort_key()))
    }
}

impl PartialOrd for AdmissibleWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AdmissibleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.seq.is_empty() {
            return write!(f, "1");
        }
        if !self.is_odd() {
            let parts: Vec<String> = self.seq.iter().map(|i| format!("Sq{i}")).collect();
            return write!(f, "{}", parts.join(" "));
        }
        let mut parts = Vec::new();
        for (i, &x) in self.seq.iter().enumerate() {
            if i % 2 == 0 {
                if x == 1 {
                    parts.push("b".to_string());
                }
            } else {
                parts.push(format!("P{x}"));
            }
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// A homogeneous `F_p`-linear combination of admissible words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteenrodElement {
    prime: Prime,
    terms: BTreeMap<AdmissibleWord, u32>,
}

impl SteenrodElement {
    pub fn zero(prime: Prime) -> Self {
        SteenrodElement {
            prime,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_word(w: AdmissibleWord) -> Self {
        let mut e = SteenrodElement::zero(w.prime);
        e.add_term(w, 1);
        e
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `None` for the zero element.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next().map(|w| w.degree())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AdmissibleWord, u32)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn coefficient(&self, w: &AdmissibleWord) -> u32 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    fn add_term(&mut self, w: AdmissibleWord, c: u32) {
        let f = self.prime.field();
        if let Some(d) = self.degree() {
            assert_eq!(d, w.degree(), "Steenrod elements are homogeneous");
        }
        let entry = self.terms.entry(w.clone()).or_insert(0);
        *entry = f.add(entry, &(c % self.prime.value()));
        if *entry == 0 {
            self.terms.remove(&w);
        }
    }

    fn add_scaled(&mut self, other: &SteenrodElement, c: u32) {
        let f = self.prime.field();
        for (w, &d) in &other.terms {
            self.add_term(w.clone(), f.mul(&c, &d));
        }
    }

    /// Product in the algebra (`p = 2` only).
    pub fn multiply(&self, other: &SteenrodElement) -> Result<SteenrodElement> {
        require_two(self.prime)?;
        let mut out = SteenrodElement::zero(self.prime);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let mut word = a.seq.clone();
                word.extend_from_slice(&b.seq);
                out.add_scaled(&adem_normal_form(self.prime, &word)?, ca * cb);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for SteenrodElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, &c)| if c == 1 { w.to_string() } else { format!("{c} {w}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn require_two(p: Prime) -> Result<()> {
    if p.value() == 2 {
        Ok(())
    } else {
        Err(Error::RequiresPrimeTwo(p.value()))
    }
}

/// `binom(n, k) mod 2` by Lucas' theorem; zero for negative arguments.
pub fn binomial_mod2(n: i64, k: i64) -> u32 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    ((k & !n) == 0) as u32
}

/// All admissible words of the given degree, optionally with excess at most
/// `max_excess`, in the order of [`AdmissibleWord`]'s `Ord`.
pub fn admissible_basis(p: Prime, degree: u32, max_excess: Option<u32>) -> Vec<AdmissibleWord> {
    let mut out = Vec::new();
    if p.value() == 2 {
        let mut prefix = Vec::new();
        enumerate_two(degree, u32::MAX, &mut prefix, &mut out);
    } else {
        let q = 2 * (p.value() - 1);
        for e0 in 0..=1u32 {
            if e0 > degree {
                continue;
            }
            let mut prefix = vec![e0];
            enumerate_odd(p.value(), q, degree - e0, None, &mut prefix, &mut out);
        }
    }
    let mut words: Vec<AdmissibleWord> = out
        .into_iter()
        .map(|seq| {
            let seq = if seq == [0] { Vec::new() } else { seq };
            AdmissibleWord { prime: p, seq }
        })
        .filter(|w| max_excess.is_none_or(|e| w.excess() <= e))
        .collect();
    words.sort();
    words
}

fn enumerate_two(remaining: u32, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if remaining == 0 {
        out.push(prefix.clone());
        return;
    }
    // i_j ≥ 2 i_{j+1} + ... forces i_j ≥ remaining/2 roughly; just bound by cap
    for i in 1..=remaining.min(cap) {
        // the tail after i has degree remaining − i and needs i ≥ 2·(next)
        // with next ≥ (remaining − i) / (2^len − 1) — cheap check: tail ≤ i − 1
        if remaining - i > i.saturating_sub(1) {
            continue;
        }
        prefix.push(i);
        enumerate_two(remaining - i, i / 2, prefix, out);
        prefix.pop();
    }
}

/// Extends a prefix ending in `ε_j`; `last_s` is `s_j` if any.
fn enumerate_odd(
    p: u32,
    q: u32,
    remaining: u32,
    last_s: Option<u32>,
    prefix: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if remaining == 0 {
        out.push(prefix.clone());
        return;
    }
    let eps_prev = *prefix.last().expect("prefix ends in a Bockstein slot");
    let mut s = 1;
    while q * s <= remaining {
        if let Some(ls) = last_s {
            if ls < p * s + eps_prev {
                break;
            }
        }
        for e in 0..=1u32 {
            if q * s + e > remaining {
                continue;
            }
            prefix.push(s);
            prefix.push(e);
            enumerate_odd(p, q, remaining - q * s - e, Some(s), prefix, out);
            prefix.pop();
            prefix.pop();
        }
        s += 1;
    }
}

/// Expand `Sq^{i_1} ⋯ Sq^{i_k}` in the admissible basis by Adem rewriting.
///
/// Zero exponents are read as `Sq^0 = 1`.
pub fn adem_normal_form(p: Prime, word: &[u32]) -> Result<SteenrodElement> {
    require_two(p)?;
    let mut memo = BTreeMap::new();
    let terms = normalize_two(word, &mut memo);
    let mut out = SteenrodElement::zero(p);
    for seq in terms {
        out.add_term(AdmissibleWord { prime: p, seq }, 1);
    }
    Ok(out)
}

/// Returns the admissible words (with multiplicity mod 2 already reduced).
fn normalize_two(word: &[u32], memo: &mut BTreeMap<Vec<u32>, Vec<Vec<u32>>>) -> Vec<Vec<u32>> {
    let word: Vec<u32> = word.iter().copied().filter(|&i| i != 0).collect();
    if let Some(hit) = memo.get(&word) {
        return hit.clone();
    }
    let Some(j) = (0..word.len().saturating_sub(1)).find(|&j| word[j] < 2 * word[j + 1]) else {
        memo.insert(word.clone(), vec![word.clone()]);
        return vec![word];
    };
    let (a, b) = (word[j] as i64, word[j + 1] as i64);
    let mut counts: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
    for c in 0..=a / 2 {
        if binomial_mod2(b - c - 1, a - 2 * c) == 0 {
            continue;
        }
        let mut next = word[..j].to_vec();
        next.push((a + b - c) as u32);
        next.push(c as u32);
        next.extend_from_slice(&word[j + 2..]);
        for t in normalize_two(&next, memo) {
            *counts.entry(t).or_insert(0) ^= 1;
        }
    }
    let result: Vec<Vec<u32>> = counts.into_iter().filter(|(_, c)| *c == 1).map(|(w, _)| w).collect();
    memo.insert(word, result.clone());
    result
}

/// The normal form of `β·w`.
pub fn beta_left_multiply(w: &AdmissibleWord) -> SteenrodElement {
    let p = w.prime;
    if p.value() == 2 {
        let word = match w.seq.first() {
            None => vec![1],
            Some(&i) if i % 2 == 0 => {
                let mut s = w.seq.clone();
                s[0] += 1;
                s
            }
            Some(_) => return SteenrodElement::zero(p),
        };
        debug_assert!(word.windows(2).all(|x| x[0] >= 2 * x[1]));
        return SteenrodElement::from_word(AdmissibleWord { prime: p, seq: word });
    }
    match w.seq.first() {
        None => SteenrodElement::from_word(AdmissibleWord { prime: p, seq: vec![1] }),
        Some(1) => SteenrodElement::zero(p),
        Some(_) => {
            let mut s = w.seq.clone();
            s[0] = 1;
            SteenrodElement::from_word(AdmissibleWord { prime: p, seq: s })
        }
    }
}

/// The normal form of `w·β` (Bockstein applied first).
pub fn beta_right_multiply(w: &AdmissibleWord) -> Result<SteenrodElement> {
    let p = w.prime;
    if p.value() == 2 {
        let mut word = w.seq.clone();
        word.push(1);
        return adem_normal_form(p, &word);
    }
    // the trailing Bockstein slot carries no admissibility constraint
    Ok(match w.seq.last() {
        None => SteenrodElement::from_word(AdmissibleWord { prime: p, seq: vec![1] }),
        Some(1) => SteenrodElement::zero(p),
        Some(_) => {
            let mut s = w.seq.clone();
            *s.last_mut().unwrap() = 1;
            SteenrodElement::from_word(AdmissibleWord { prime: p, seq: s })
        }
    })
}
