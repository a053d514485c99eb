//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients in a fixed number of variables.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vector. For vectors of
//! equal length, lexicographic order on exponents coincides with
//! lexicographic order on prefix sums, so map order is the default term
//! order and iteration is deterministic.

mod operators;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::combinat::{Permutation, WeakComposition};
use crate::error::{Error, Result};

pub use operators::{alternant, apply_operator_word, demazure, divided_difference, vandermonde, OperatorKind};

/// An element of `Z[x_1, …, x_n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<WeakComposition, BigInt>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(WeakComposition::zeros(nvars), c.into());
        p
    }

    /// `x^a` in `a.len()` variables.
    pub fn monomial(a: WeakComposition) -> Self {
        let mut p = Self::zero(a.len());
        p.add_term(a, BigInt::one());
        p
    }

    /// `x_i` (1-based).
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        Self::monomial(WeakComposition::new(e))
    }

    /// Sums `x^a` over the given exponents, counting repeats.
    pub fn from_monomials(nvars: usize, exps: impl IntoIterator<Item = WeakComposition>) -> Self {
        let mut p = Self::zero(nvars);
        for e in exps {
            p.add_term(e, BigInt::one());
        }
        p
    }

    /// Adds `c·x^a` in place. Panics if `a` has the wrong length.
    pub fn add_term(&mut self, a: WeakComposition, c: BigInt) {
        assert_eq!(a.len(), self.nvars, "exponent length must equal the variable count");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(a) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&WeakComposition, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, a: &WeakComposition) -> BigInt {
        self.terms.get(a).cloned().unwrap_or_default()
    }

    pub fn min_term(&self) -> Option<(&WeakComposition, &BigInt)> {
        self.terms.iter().next()
    }

    pub fn max_term(&self) -> Option<(&WeakComposition, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|k| k.size());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Splits into homogeneous components keyed by degree.
    pub fn homogeneous_components(&self) -> BTreeMap<u64, Polynomial> {
        let mut out: BTreeMap<u64, Polynomial> = BTreeMap::new();
        for (k, v) in &self.terms {
            out.entry(k.size())
                .or_insert_with(|| Polynomial::zero(self.nvars))
                .add_term(k.clone(), v.clone());
        }
        out
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    fn check_ambient(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::AmbientMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), -v);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ambient(other)?;
        let mut acc: HashMap<Vec<u32>, BigInt> = HashMap::new();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let e: Vec<u32> = a
                    .entries()
                    .iter()
                    .zip(b.entries())
                    .map(|(x, y)| x + y)
                    .collect();
                *acc.entry(e).or_insert_with(BigInt::zero) += c * d;
            }
        }
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (WeakComposition::new(e), c))
            .collect();
        Ok(Polynomial {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn scaled(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        (0..k).fold(Polynomial::one(self.nvars), |acc, _| &acc * self)
    }

    /// Sets `x_{m+1}, …, x_n` to zero and drops them (`m ≤ n`), or appends
    /// unused variables (`m > n`).
    pub fn restrict(&self, m: usize) -> Polynomial {
        let mut out = Polynomial::zero(m);
        for (k, v) in &self.terms {
            if k.entries().iter().skip(m).all(|&e| e == 0) {
                let mut e: Vec<u32> = k.entries().iter().take(m).copied().collect();
                e.resize(m, 0);
                out.add_term(WeakComposition::new(e), v.clone());
            }
        }
        out
    }

    /// Largest variable index actually occurring, 0 for constants.
    pub fn support_vars(&self) -> usize {
        self.terms.keys().map(|k| k.support_len()).max().unwrap_or(0)
    }

    /// Substitutes `x_i ↦ x_{p(i)}`; `p` is padded to `S_n`.
    pub fn act_permutation(&self, p: &Permutation) -> Result<Polynomial> {
        if p.size() > self.nvars {
            return Err(Error::AmbientMismatch(p.size(), self.nvars));
        }
        let mut out = Polynomial::zero(self.nvars);
        for (k, v) in &self.terms {
            let mut e = vec![0; self.nvars];
            for (i, &a) in k.entries().iter().enumerate() {
                e[p.apply(i + 1) - 1] = a;
            }
            out.add_term(WeakComposition::new(e), v.clone());
        }
        Ok(out)
    }

    /// `s_i · f`, exchanging `x_i` and `x_{i+1}`.
    pub fn swap_variables(&self, i: usize) -> Polynomial {
        assert!(i >= 1 && i < self.nvars, "index {i} out of range for {} variables", self.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (k, v) in &self.terms {
            let mut e = k.entries().to_vec();
            e.swap(i - 1, i);
            out.add_term(WeakComposition::new(e), v.clone());
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        (1..self.nvars).all(|i| self.swap_variables(i) == *self)
    }

    /// Coefficients of `x^b` and `x^c` agree whenever `b⁺ = c⁺`.
    pub fn is_quasisymmetric(&self) -> bool {
        let mut groups: HashMap<Vec<u32>, (usize, &BigInt)> = HashMap::new();
        for (k, v) in &self.terms {
            let key = k.positive_part().entries().to_vec();
            match groups.get_mut(&key) {
                None => {
                    groups.insert(key, (1, v));
                }
                Some((count, c)) => {
                    if *c != v {
                        return false;
                    }
                    *count += 1;
                }
            }
        }
        groups
            .iter()
            .all(|(k, (count, _))| *count as u128 == binomial(self.nvars, k.len()))
    }

    /// Exact quotient `self / divisor`, eliminating lexicographically
    /// leading terms.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.check_ambient(divisor)?;
        let (lead, lead_c) = divisor.max_term().ok_or(Error::InexactDivision)?;
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.nvars);
        while let Some((top, top_c)) = rem.max_term() {
            let mut e = Vec::with_capacity(self.nvars);
            for (x, y) in top.entries().iter().zip(lead.entries()) {
                if x < y {
                    return Err(Error::InexactDivision);
                }
                e.push(x - y);
            }
            if !(top_c % lead_c).is_zero() {
                return Err(Error::InexactDivision);
            }
            let q = top_c / lead_c;
            let e = WeakComposition::new(e);
            for (k, v) in &divisor.terms {
                let shifted: Vec<u32> = k.entries().iter().zip(e.entries()).map(|(a, b)| a + b).collect();
                rem.add_term(WeakComposition::new(shifted), -(v * &q));
            }
            quot.add_term(e, q);
        }
        Ok(quot)
    }

    /// Canonical text: one `coefficient<TAB>e1,…,en` line per term in
    /// descending term order. The zero polynomial renders as no lines.
    pub fn to_canonical_text(&self) -> String {
        let mut s = String::new();
        for (k, v) in self.terms.iter().rev() {
            s.push_str(&v.to_string());
            s.push('\t');
            let exps: Vec<String> = k.entries().iter().map(|e| e.to_string()).collect();
            s.push_str(&exps.join(","));
            s.push('\n');
        }
        s
    }

    /// Parses [`Polynomial::to_canonical_text`] output. Term order in the
    /// input is not checked; `nvars` is required for the zero polynomial.
    pub fn parse_canonical(text: &str, nvars: usize) -> Result<Polynomial> {
        let mut p = Polynomial::zero(nvars);
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let err = || Error::Parse {
                what: "polynomial term",
                input: line.to_string(),
            };
            let (c, e) = line.split_once('\t').ok_or_else(err)?;
            let c = BigInt::from_str(c.trim()).map_err(|_| err())?;
            let e: Vec<u32> = if e.trim().is_empty() {
                Vec::new()
            } else {
                e.split(',')
                    .map(|t| t.trim().parse::<u32>().map_err(|_| err()))
                    .collect::<Result<_>>()?
            };
            if e.len() != nvars {
                return Err(Error::AmbientMismatch(e.len(), nvars));
            }
            p.add_term(WeakComposition::new(e), c);
        }
        Ok(p)
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, v)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(if v.is_negative() { " - " } else { " + " })?;
            } else if v.is_negative() {
                f.write_str("-")?;
            }
            write!(f, "{}x^{}", v.abs(), k)?;
        }
        Ok(())
    }
}

struct TermsSer<'a>(&'a Polynomial);

struct TermSer<'a>(&'a WeakComposition, &'a BigInt);

impl Serialize for TermSer<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("coefficient", &self.1.to_string())?;
        m.serialize_entry("exponents", self.0)?;
        m.end()
    }
}

impl Serialize for TermsSer<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.terms.len()))?;
        for (k, v) in self.0.terms.iter().rev() {
            seq.serialize_element(&TermSer(k, v))?;
        }
        seq.end()
    }
}

/// Coefficients are emitted as decimal strings to stay exact.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("nvars", &self.nvars)?;
        m.serialize_entry("terms", &TermsSer(self))?;
        m.end()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ambient mismatch in polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("ambient mismatch in polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ambient mismatch in polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scaled(&BigInt::from(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Polynomial {
        Polynomial::monomial(WeakComposition::new(e.to_vec()))
    }

    #[test]
    fn square_of_sum() {
        let s = &Polynomial::variable(2, 1) + &Polynomial::variable(2, 2);
        let sq = &s * &s;
        assert_eq!(sq.to_canonical_text(), "1\t2,0\n2\t1,1\n1\t0,2\n");
        assert_eq!(&sq + &Polynomial::zero(2), sq);
        assert_eq!(&sq * &Polynomial::one(2), sq);
    }

    #[test]
    fn ambient_mismatch() {
        assert_eq!(
            Polynomial::one(2).try_add(&Polynomial::one(3)),
            Err(Error::AmbientMismatch(2, 3))
        );
    }

    #[test]
    fn canonical_round_trip() {
        let f = &(&mono(&[2, 1, 0]) - &mono(&[0, 1, 2]).scaled(&BigInt::from(3))) + &mono(&[1, 1, 1]);
        let text = f.to_canonical_text();
        assert_eq!(Polynomial::parse_canonical(&text, 3).unwrap(), f);
        assert_eq!(Polynomial::zero(3).to_canonical_text(), "");
        assert_eq!(Polynomial::one(2).to_canonical_text(), "1\t0,0\n");
    }

    #[test]
    fn permutation_action() {
        let f = mono(&[2, 1]);
        let g = f.act_permutation(&"21".parse().unwrap()).unwrap();
        assert_eq!(g, mono(&[1, 2]));
        let h = mono(&[3, 1, 0]);
        let p: Permutation = "231".parse().unwrap();
        assert_eq!(h.act_permutation(&p).unwrap(), mono(&[0, 3, 1]));
    }

    #[test]
    fn exact_division() {
        let x1 = Polynomial::variable(2, 1);
        let x2 = Polynomial::variable(2, 2);
        let d = &x1 - &x2;
        let num = &mono(&[2, 1]) - &mono(&[1, 2]);
        assert_eq!(num.div_exact(&d).unwrap(), mono(&[1, 1]));
        assert_eq!(mono(&[1, 0]).div_exact(&(&x1 + &x2)), Err(Error::InexactDivision));
    }

    #[test]
    fn quasisymmetry_predicates() {
        let m13 = Polynomial::from_monomials(
            3,
            [[1, 3, 0], [1, 0, 3], [0, 1, 3]].map(|e| WeakComposition::new(e.to_vec())),
        );
        assert!(m13.is_quasisymmetric());
        assert!(!m13.is_symmetric());
        assert!(Polynomial::constant(3, 5).is_symmetric());
        assert!(!mono(&[1, 0, 0]).is_quasisymmetric());
    }
}
