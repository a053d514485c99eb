//! Weak compositions, strong compositions and partitions.
//!
//! All three are rendered as parenthesized comma-separated lists, e.g.
//! `(1,0,3)`. The empty sequence renders as `()`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

fn fmt_seq(f: &mut fmt::Formatter<'_>, entries: &[u32]) -> fmt::Result {
    f.write_str("(")?;
    for (i, e) in entries.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{e}")?;
    }
    f.write_str(")")
}

/// Parses `(1,0,3)`. Surrounding whitespace and whitespace around entries is
/// tolerated, the parentheses are required.
pub(crate) fn parse_seq(what: &'static str, s: &str) -> Result<Vec<u32>> {
    let err = || Error::Parse {
        what,
        input: s.to_string(),
    };
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(err)?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| err()))
        .collect()
}

/// A finite sequence of nonnegative integers with an explicit length.
///
/// Trailing zeros are significant: `(1,0)` and `(1,0,0)` are different
/// values. Use [`WeakComposition::padded`] or [`WeakComposition::trimmed`]
/// to change the length explicitly.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct WeakComposition(Vec<u32>);

impl WeakComposition {
    pub fn new(entries: Vec<u32>) -> Self {
        WeakComposition(entries)
    }

    pub fn zeros(n: usize) -> Self {
        WeakComposition(vec![0; n])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the entries.
    pub fn size(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn prefix_sums(&self) -> Vec<u64> {
        self.0
            .iter()
            .scan(0u64, |acc, &e| {
                *acc += e as u64;
                Some(*acc)
            })
            .collect()
    }

    /// Appends zeros up to length `n`; never truncates.
    pub fn padded(&self, n: usize) -> Self {
        let mut v = self.0.clone();
        if v.len() < n {
            v.resize(n, 0);
        }
        WeakComposition(v)
    }

    /// Drops trailing zeros.
    pub fn trimmed(&self) -> Self {
        let mut v = self.0.clone();
        while v.last() == Some(&0) {
            v.pop();
        }
        WeakComposition(v)
    }

    /// Position one past the last nonzero entry.
    pub fn support_len(&self) -> usize {
        self.0.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1)
    }

    /// `0^m a`.
    pub fn prepend_zeros(&self, m: usize) -> Self {
        let mut v = vec![0; m];
        v.extend_from_slice(&self.0);
        WeakComposition(v)
    }

    pub fn reversed(&self) -> Self {
        WeakComposition(self.0.iter().rev().copied().collect())
    }

    pub fn positive_part(&self) -> StrongComposition {
        StrongComposition(self.0.iter().copied().filter(|&e| e > 0).collect())
    }

    /// The entries sorted into weakly decreasing order, zeros dropped.
    pub fn sorted_partition(&self) -> Partition {
        let mut v: Vec<u32> = self.0.iter().copied().filter(|&e| e > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Set of positions (1-based) holding nonzero entries.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

impl From<Vec<u32>> for WeakComposition {
    fn from(v: Vec<u32>) -> Self {
        WeakComposition(v)
    }
}

impl From<&[u32]> for WeakComposition {
    fn from(v: &[u32]) -> Self {
        WeakComposition(v.to_vec())
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_seq(f, &self.0)
    }
}

impl FromStr for WeakComposition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_seq("weak composition", s).map(WeakComposition)
    }
}

/// A finite sequence of strictly positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct StrongComposition(Vec<u32>);

impl StrongComposition {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.contains(&0) {
            return Err(Error::InvalidStrongComposition(
                WeakComposition(entries).to_string(),
            ));
        }
        Ok(StrongComposition(entries))
    }

    pub(crate) fn new_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(entries.iter().all(|&e| e > 0));
        StrongComposition(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// The weak composition `0^(n - len) α`.
    pub fn right_justified(&self, n: usize) -> WeakComposition {
        let k = n.saturating_sub(self.0.len());
        WeakComposition(self.0.clone()).prepend_zeros(k)
    }

    /// The weak composition `α 0^(n - len)`.
    pub fn to_weak(&self, n: usize) -> WeakComposition {
        WeakComposition(self.0.clone()).padded(n)
    }

    pub fn sorted_partition(&self) -> Partition {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }
}

impl fmt::Display for StrongComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_seq(f, &self.0)
    }
}

impl FromStr for StrongComposition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StrongComposition::new(parse_seq("strong composition", s)?)
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Accepts trailing zeros and strips them.
    pub fn new(mut entries: Vec<u32>) -> Result<Self> {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        if entries.windows(2).any(|w| w[0] < w[1]) || entries.contains(&0) {
            return Err(Error::InvalidPartition(
                WeakComposition(entries).to_string(),
            ));
        }
        Ok(Partition(entries))
    }

    pub(crate) fn new_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!entries.contains(&0));
        Partition(entries)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn to_weak(&self, n: usize) -> WeakComposition {
        WeakComposition(self.0.clone()).padded(n)
    }

    pub fn to_strong(&self) -> StrongComposition {
        StrongComposition(self.0.clone())
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        Partition(
            (0..cols)
                .map(|c| self.0.iter().filter(|&&p| p as usize > c).count() as u32)
                .collect(),
        )
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(o, s)| o <= s)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_seq(f, &self.0)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_seq("partition", s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_and_parse() {
        let a: WeakComposition = "(1,0,3)".parse().unwrap();
        assert_eq!(a.entries(), &[1, 0, 3]);
        assert_eq!(a.to_string(), "(1,0,3)");
        assert_eq!(" ( 2 , 1 ) ".parse::<Partition>().unwrap().to_string(), "(2,1)");
        assert_eq!("()".parse::<WeakComposition>().unwrap().len(), 0);
        assert!("1,2".parse::<WeakComposition>().is_err());
        assert!("(1,0)".parse::<StrongComposition>().is_err());
        assert!("(1,2)".parse::<Partition>().is_err());
    }

    #[test]
    fn trailing_zeros_are_significant() {
        let a = WeakComposition::new(vec![1, 0]);
        let b = WeakComposition::new(vec![1, 0, 0]);
        assert_ne!(a, b);
        assert_eq!(a.padded(3), b);
        assert_eq!(b.trimmed(), WeakComposition::new(vec![1]));
    }

    #[test]
    fn positive_part_examples() {
        let a = WeakComposition::new(vec![1, 3, 0]);
        assert_eq!(a.positive_part().entries(), &[1, 3]);
        assert!(WeakComposition::zeros(3).positive_part().is_empty());
        assert_eq!(a.padded(7).positive_part(), a.positive_part());
    }

    #[test]
    fn conjugate_partition() {
        let p = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(p.conjugate().entries(), &[2, 1, 1]);
        assert_eq!(p.conjugate().conjugate(), p);
        assert!(Partition::empty().conjugate().is_empty());
    }
}
