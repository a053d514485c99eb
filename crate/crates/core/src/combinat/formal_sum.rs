use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

/// A finitely supported integer combination of indices.
///
/// Zero coefficients are never stored, so two sums are equal exactly when
/// they have the same support and coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FormalSum<I: Ord> {
    terms: BTreeMap<I, BigInt>,
}

impl<I: Ord> Default for FormalSum<I> {
    fn default() -> Self {
        FormalSum {
            terms: BTreeMap::new(),
        }
    }
}

impl<I: Ord + Clone> FormalSum<I> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(index: I) -> Self {
        let mut s = Self::new();
        s.add_term(index, BigInt::from(1));
        s
    }

    pub fn add_term(&mut self, index: I, coeff: impl Into<BigInt>) {
        let coeff = coeff.into();
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(index.clone()).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&index);
        }
    }

    pub fn coefficient(&self, index: &I) -> BigInt {
        self.terms.get(index).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&I, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        let mut out = Self::new();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn negative_terms(&self) -> Vec<(I, BigInt)> {
        self.terms
            .iter()
            .filter(|(_, c)| c.is_negative())
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn map_indices<J: Ord + Clone>(&self, mut f: impl FnMut(&I) -> J) -> FormalSum<J> {
        let mut out = FormalSum::new();
        for (k, v) in &self.terms {
            out.add_term(f(k), v.clone());
        }
        out
    }
}

impl<I: Ord + Clone> FromIterator<(I, BigInt)> for FormalSum<I> {
    fn from_iter<T: IntoIterator<Item = (I, BigInt)>>(iter: T) -> Self {
        let mut s = Self::new();
        for (k, v) in iter {
            s.add_term(k, v);
        }
        s
    }
}

impl<I: Ord + Clone> AddAssign<&FormalSum<I>> for FormalSum<I> {
    fn add_assign(&mut self, rhs: &FormalSum<I>) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), v.clone());
        }
    }
}

impl<I: Ord + Clone> Add for &FormalSum<I> {
    type Output = FormalSum<I>;
    fn add(self, rhs: &FormalSum<I>) -> FormalSum<I> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<I: Ord + Clone> Neg for &FormalSum<I> {
    type Output = FormalSum<I>;
    fn neg(self) -> FormalSum<I> {
        self.scaled(&BigInt::from(-1))
    }
}

impl<I: Ord + Clone> Sub for &FormalSum<I> {
    type Output = FormalSum<I>;
    fn sub(self, rhs: &FormalSum<I>) -> FormalSum<I> {
        self + &(-rhs)
    }
}

/// `coeff*index` terms joined by ` + `, in index order; `0` when empty.
impl<I: Ord + fmt::Display> fmt::Display for FormalSum<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, v)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{v}*{k}")?;
        }
        Ok(())
    }
}

/// A sequence of `{index, coefficient}` records, coefficients as decimal
/// strings.
impl<I: Ord + Serialize> Serialize for FormalSum<I> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(serde::Serialize)]
        struct Term<'a, I> {
            index: &'a I,
            coefficient: String,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (index, c) in &self.terms {
            seq.serialize_element(&Term {
                index,
                coefficient: c.to_string(),
            })?;
        }
        seq.end()
    }
}
