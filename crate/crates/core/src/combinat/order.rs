//! Dominance, refinement and total term orders on compositions, plus the
//! sorting permutations and left-swap closures of a weak composition.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use super::composition::{Partition, StrongComposition, WeakComposition};
use super::permutation::Permutation;
use crate::error::{Error, Result};

fn padded_prefix_sums(a: &WeakComposition, n: usize) -> Vec<u64> {
    a.padded(n).prefix_sums()
}

/// `a ≤ b` in dominance: every prefix sum of `a` is at most that of `b`.
/// The shorter argument is padded with zeros.
pub fn dominance_leq(a: &WeakComposition, b: &WeakComposition) -> bool {
    let n = a.len().max(b.len());
    padded_prefix_sums(a, n)
        .iter()
        .zip(padded_prefix_sums(b, n).iter())
        .all(|(x, y)| x <= y)
}

/// Total orders on weak compositions of equal degree.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum TermOrder {
    /// Lexicographic comparison of prefix-sum vectors; refines dominance.
    #[default]
    PrefixSumLex,
    Lex,
    /// Compare from the last position; a larger last entry is smaller.
    RevLex,
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TermOrder::PrefixSumLex => "pslex",
            TermOrder::Lex => "lex",
            TermOrder::RevLex => "revlex",
        })
    }
}

impl FromStr for TermOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pslex" | "prefix-sum-lex" => Ok(TermOrder::PrefixSumLex),
            "lex" => Ok(TermOrder::Lex),
            "revlex" => Ok(TermOrder::RevLex),
            _ => Err(Error::Unknown {
                what: "term order",
                name: s.to_string(),
            }),
        }
    }
}

/// Compares `a` and `b` in the given order after padding to equal length.
pub fn term_order_compare(
    a: &WeakComposition,
    b: &WeakComposition,
    order: TermOrder,
) -> Result<Ordering> {
    if a.size() != b.size() {
        return Err(Error::DegreeMismatch(a.size(), b.size()));
    }
    let n = a.len().max(b.len());
    let (a, b) = (a.padded(n), b.padded(n));
    Ok(match order {
        TermOrder::PrefixSumLex => a.prefix_sums().cmp(&b.prefix_sums()),
        TermOrder::Lex => a.entries().cmp(b.entries()),
        TermOrder::RevLex => {
            let first = a
                .entries()
                .iter()
                .zip(b.entries())
                .rev()
                .find(|(x, y)| x != y);
            match first {
                Some((x, y)) => y.cmp(x),
                None => Ordering::Equal,
            }
        }
    })
}

/// `β ⊨ α`: `α` is obtained by summing consecutive entries of `β`.
pub fn refines(beta: &StrongComposition, alpha: &StrongComposition) -> bool {
    let mut parts = beta.entries().iter();
    for &target in alpha.entries() {
        let mut acc = 0u32;
        while acc < target {
            match parts.next() {
                Some(&p) => acc += p,
                None => return false,
            }
        }
        if acc != target {
            return false;
        }
    }
    parts.next().is_none()
}

/// `sort(a)` and the minimal-length permutations relating `a` to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SortingData {
    pub sort: Partition,
    /// Lists positions of `a` in the order they appear in `sort(a)`:
    /// `a_{w(i)} = sort(a)_i`, ties broken left to right.
    pub w: Permutation,
    /// `w⁻¹`: sends position `i` of `a` to its position in `sort(a)`.
    pub v: Permutation,
}

pub fn sorting_data(a: &WeakComposition) -> SortingData {
    let mut positions: Vec<usize> = (1..=a.len()).collect();
    positions.sort_by(|&i, &j| a.entries()[j - 1].cmp(&a.entries()[i - 1]).then(i.cmp(&j)));
    let w = Permutation::new(positions).expect("positions form a permutation");
    let v = w.inverse();
    SortingData {
        sort: a.sorted_partition(),
        w,
        v,
    }
}

/// Closure of `{a}` under left swaps: exchanging `a_i < a_j` with `i < j`.
pub fn lswap_closure(a: &WeakComposition) -> BTreeSet<WeakComposition> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(a.clone());
    queue.push_back(a.clone());
    while let Some(cur) = queue.pop_front() {
        let e = cur.entries();
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                if e[i] < e[j] {
                    let mut next = e.to_vec();
                    next.swap(i, j);
                    let next = WeakComposition::new(next);
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    seen
}

/// Members of `lswap(a)` that are dominance-minimal among those with the
/// same positive part.
pub fn qlswap(a: &WeakComposition) -> BTreeSet<WeakComposition> {
    let closure = lswap_closure(a);
    closure
        .iter()
        .filter(|b| {
            let bp = b.positive_part();
            closure
                .iter()
                .filter(|c| c.positive_part() == bp)
                .all(|c| dominance_leq(b, c))
        })
        .cloned()
        .collect()
}
