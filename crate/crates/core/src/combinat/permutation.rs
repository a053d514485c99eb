//! Permutations in one-line notation, Lehmer codes, Rothe diagrams,
//! reduced words and Bruhat order.
//!
//! Products follow function composition: `p.compose(q)` is `p ∘ q`, and the
//! word `i₁ i₂ ⋯ i_k` denotes `s_{i₁} ∘ s_{i₂} ∘ ⋯ ∘ s_{i_k}`. Right
//! multiplication by `s_i` swaps the entries in positions `i` and `i+1`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::composition::{StrongComposition, WeakComposition};
use crate::error::{Error, Result};

/// A bijection of `{1, …, n}` stored in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(one_line));
            }
            seen[v] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// The longest element `n (n-1) ⋯ 1` of `S_n`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// `n` for a permutation of `S_n`.
    pub fn size(&self) -> usize {
        self.0.len()
    }

    /// `p(i)` for 1-based `i`; fixed beyond the stored size.
    pub fn apply(&self, i: usize) -> usize {
        if i >= 1 && i <= self.0.len() {
            self.0[i - 1]
        } else {
            i
        }
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Embeds into `S_n` by appending fixed points; never shrinks.
    pub fn padded(&self, n: usize) -> Self {
        let mut v = self.0.clone();
        for k in v.len() + 1..=n {
            v.push(k);
        }
        Permutation(v)
    }

    /// Drops trailing fixed points.
    pub fn trimmed(&self) -> Self {
        let mut v = self.0.clone();
        while let Some(&last) = v.last() {
            if last == v.len() {
                v.pop();
            } else {
                break;
            }
        }
        Permutation(v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `self ∘ other`, padding both to a common size.
    pub fn compose(&self, other: &Permutation) -> Self {
        let n = self.size().max(other.size());
        Permutation((1..=n).map(|i| self.apply(other.apply(i))).collect())
    }

    /// `self · s_i`: swaps positions `i` and `i+1` (1-based).
    pub fn swap_positions(&self, i: usize) -> Self {
        let mut p = self.padded(i + 1);
        p.0.swap(i - 1, i);
        p
    }

    /// Coxeter length, i.e. the number of inversions.
    pub fn length(&self) -> usize {
        let n = self.0.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.0[i] > self.0[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// 1-based positions `i` with `p(i) > p(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Sign `(-1)^length`.
    pub fn sign(&self) -> i32 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// All permutations of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation(cur.clone()));
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }

    /// Product of the simple transpositions of `word` as a permutation of
    /// `S_n`, with `n` large enough to contain every letter.
    pub fn from_word(word: &[u32]) -> Self {
        let n = word.iter().map(|&i| i as usize + 1).max().unwrap_or(0);
        word.iter()
            .fold(Permutation::identity(n), |p, &i| p.swap_positions(i as usize))
    }
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&v| v <= 9) {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            for (i, v) in self.0.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Bare digits (`2413`) or comma-separated values (`2,4,1,3,10,...`).
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "permutation",
            input: s.to_string(),
        };
        let s = s.trim();
        let values: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| err()))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(err))
                .collect::<Result<_>>()?
        };
        Permutation::new(values)
    }
}

/// Entry `i` counts `j > i` with `p(i) > p(j)`; the result has length `n`.
pub fn lehmer_code(p: &Permutation) -> WeakComposition {
    let v = p.one_line();
    WeakComposition::new(
        (0..v.len())
            .map(|i| v[i + 1..].iter().filter(|&&x| x < v[i]).count() as u32)
            .collect(),
    )
}

/// The minimal permutation whose code, restricted to `a.len()` positions,
/// is `a`. Every finitely supported code is valid once padded with zeros,
/// so this never fails; the size is `max(len, max_i(i + a_i))`.
pub fn code_to_permutation(a: &WeakComposition) -> Permutation {
    let n = a
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &c)| i + 1 + c as usize)
        .max()
        .unwrap_or(0)
        .max(a.len());
    build_from_code(a.entries(), n)
}

/// Like [`code_to_permutation`], but insists on a permutation of `S_n`.
pub fn code_to_permutation_in(a: &WeakComposition, n: usize) -> Result<Permutation> {
    let ok = a.len() <= n
        && a.entries()
            .iter()
            .enumerate()
            .all(|(i, &c)| (c as usize) < n - i);
    if !ok {
        return Err(Error::InvalidCode {
            code: a.to_string(),
            n,
        });
    }
    Ok(build_from_code(a.entries(), n))
}

fn build_from_code(code: &[u32], n: usize) -> Permutation {
    let mut available: Vec<usize> = (1..=n).collect();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let c = code.get(i).copied().unwrap_or(0) as usize;
        out.push(available.remove(c));
    }
    Permutation(out)
}

/// Boxes `(row, column)` with `column < p(row)` and `p⁻¹(column) > row`.
pub fn rothe_diagram(p: &Permutation) -> BTreeSet<(usize, usize)> {
    let inv = p.inverse();
    let n = p.size();
    let mut boxes = BTreeSet::new();
    for i in 1..=n {
        for j in 1..p.apply(i) {
            if inv.apply(j) > i {
                boxes.insert((i, j));
            }
        }
    }
    boxes
}

/// All reduced words of `p`, sorted lexicographically.
pub fn reduced_words(p: &Permutation) -> Vec<StrongComposition> {
    let mut memo: HashMap<Permutation, Vec<Vec<u32>>> = HashMap::new();
    let mut words = reduced_words_rec(&p.trimmed(), &mut memo);
    words.sort();
    words
        .into_iter()
        .map(StrongComposition::new_unchecked)
        .collect()
}

fn reduced_words_rec(
    p: &Permutation,
    memo: &mut HashMap<Permutation, Vec<Vec<u32>>>,
) -> Vec<Vec<u32>> {
    if p.is_identity() {
        return vec![Vec::new()];
    }
    if let Some(w) = memo.get(p) {
        return w.clone();
    }
    let mut out = Vec::new();
    for i in p.descents() {
        let shorter = p.swap_positions(i).trimmed();
        for mut w in reduced_words_rec(&shorter, memo) {
            w.push(i as u32);
            out.push(w);
        }
    }
    memo.insert(p.clone(), out.clone());
    out
}

/// One fixed reduced word: repeatedly strip the leftmost descent from the right.
pub fn canonical_reduced_word(p: &Permutation) -> Vec<u32> {
    let mut cur = p.clone();
    let mut rev = Vec::new();
    while let Some(&i) = cur.descents().first() {
        rev.push(i as u32);
        cur = cur.swap_positions(i);
    }
    rev.reverse();
    rev
}

/// Strong Bruhat order via the subword property: `u ≤ v` iff `u` is the
/// product of a reduced subword of a fixed reduced word of `v`.
pub fn bruhat_leq(u: &Permutation, v: &Permutation) -> bool {
    let n = u.size().max(v.size());
    let u = u.padded(n);
    let v = v.padded(n);
    if u.length() > v.length() {
        return false;
    }
    let word = canonical_reduced_word(&v);
    let mut reachable: HashSet<Permutation> = HashSet::new();
    reachable.insert(Permutation::identity(n));
    for &i in &word {
        let i = i as usize;
        let extended: Vec<Permutation> = reachable
            .iter()
            .filter(|x| x.apply(i) < x.apply(i + 1))
            .map(|x| x.swap_positions(i))
            .collect();
        reachable.extend(extended);
    }
    reachable.contains(&u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn lehmer_examples() {
        assert_eq!(lehmer_code(&perm("2413")).entries(), &[1, 2, 0, 0]);
        assert_eq!(lehmer_code(&perm("1234")).entries(), &[0, 0, 0, 0]);
        assert_eq!(lehmer_code(&perm("321")).entries(), &[2, 1, 0]);
    }

    #[test]
    fn code_inverse_examples() {
        let a = WeakComposition::new(vec![1, 2, 0, 0]);
        assert_eq!(code_to_permutation(&a), perm("2413"));
        assert_eq!(code_to_permutation(&WeakComposition::zeros(3)), perm("123"));
        assert_eq!(code_to_permutation(&WeakComposition::new(vec![1, 2])), perm("2413"));
        assert!(code_to_permutation_in(&WeakComposition::new(vec![1, 2]), 3).is_err());
        assert_eq!(
            code_to_permutation_in(&WeakComposition::new(vec![2, 0, 0]), 3).unwrap(),
            perm("312")
        );
    }

    #[test]
    fn code_round_trip_s4_s5() {
        for n in 4..=5 {
            for p in Permutation::all(n) {
                let c = lehmer_code(&p);
                assert_eq!(code_to_permutation_in(&c, n).unwrap(), p);
                assert_eq!(code_to_permutation(&c).padded(n), p);
            }
        }
    }

    #[test]
    fn rothe_examples() {
        let d = rothe_diagram(&perm("2413"));
        assert_eq!(d, [(1, 1), (2, 1), (2, 3)].into_iter().collect());
        assert!(rothe_diagram(&perm("1234")).is_empty());
        let p = perm("15324");
        let d = rothe_diagram(&p);
        let mut rows = vec![0u32; 5];
        for (r, _) in d {
            rows[r - 1] += 1;
        }
        assert_eq!(rows, vec![0, 3, 1, 0, 0]);
        assert_eq!(lehmer_code(&p).entries(), &rows[..]);
    }

    #[test]
    fn reduced_word_examples() {
        let words: Vec<String> = reduced_words(&perm("321"))
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(words, vec!["(1,2,1)", "(2,1,2)"]);
        assert_eq!(reduced_words(&perm("123")), vec![StrongComposition::default()]);
        assert_eq!(reduced_words(&perm("4321")).len(), 16);
    }

    #[test]
    fn reduced_words_multiply_back() {
        for p in Permutation::all(4) {
            for w in reduced_words(&p) {
                assert_eq!(w.len(), p.length());
                assert_eq!(Permutation::from_word(w.entries()).padded(4), p);
            }
        }
    }

    #[test]
    fn bruhat_examples() {
        assert!(bruhat_leq(&perm("231"), &perm("321")));
        assert!(!bruhat_leq(&perm("321"), &perm("231")));
        assert!(!bruhat_leq(&perm("231"), &perm("312")));
        for v in Permutation::all(3) {
            assert!(bruhat_leq(&Permutation::identity(3), &v));
            assert!(bruhat_leq(&v, &v));
        }
    }

    #[test]
    fn parse_forms() {
        assert_eq!(perm("2,4,1,3"), perm("2413"));
        let big: Permutation = "1,2,3,4,5,6,7,8,9,11,10".parse().unwrap();
        assert_eq!(big.to_string(), "1,2,3,4,5,6,7,8,9,11,10");
        assert!("1224".parse::<Permutation>().is_err());
        assert!("12a".parse::<Permutation>().is_err());
    }
}
