//! Shuffle and overlapping shuffle products of strong compositions.

use crate::combinat::{FormalSum, StrongComposition};
use crate::tableaux::descent_composition;

/// A composition spelled as a word: entry `i` of an `ℓ`-part composition
/// contributes that many copies of `2(ℓ − i) + 1` (odd alphabet) or
/// `2(ℓ − i) + 2` (even alphabet), `i` counted from 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShuffleWord(Vec<u32>);

impl ShuffleWord {
    pub fn odd(entries: &[u32]) -> Self {
        Self::encode(entries, 1)
    }

    pub fn even(entries: &[u32]) -> Self {
        Self::encode(entries, 2)
    }

    fn encode(entries: &[u32], offset: u32) -> Self {
        let l = entries.len() as u32;
        let mut w = Vec::new();
        for (i, &e) in entries.iter().enumerate() {
            let letter = 2 * (l - 1 - i as u32) + offset;
            w.extend(std::iter::repeat_n(letter, e as usize));
        }
        ShuffleWord(w)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }
}

/// Every interleaving of `a` and `b`, one per choice of positions for the
/// letters of `b`.
pub fn shuffles(a: &[u32], b: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(a.len() + b.len());
    shuffle_rec(a, b, &mut cur, &mut out);
    out
}

fn shuffle_rec(a: &[u32], b: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if a.is_empty() && b.is_empty() {
        out.push(cur.clone());
        return;
    }
    if let Some((&x, rest)) = a.split_first() {
        cur.push(x);
        shuffle_rec(rest, b, cur, out);
        cur.pop();
    }
    if let Some((&y, rest)) = b.split_first() {
        cur.push(y);
        shuffle_rec(a, rest, cur, out);
        cur.pop();
    }
}

/// `Σ Des(C)` over shuffles `C` of the encoded words of `α` and `β`.
pub fn shuffle_product(
    alpha: &StrongComposition,
    beta: &StrongComposition,
) -> FormalSum<StrongComposition> {
    let a = ShuffleWord::odd(alpha.entries());
    let b = ShuffleWord::even(beta.entries());
    let mut out = FormalSum::new();
    for c in shuffles(a.letters(), b.letters()) {
        out.add_term(descent_composition(&c), 1);
    }
    out
}

/// Sum over overlapping shuffles: each step takes the next part of `α`,
/// of `β`, or both merged into one part.
pub fn overlapping_shuffle_product(
    alpha: &StrongComposition,
    beta: &StrongComposition,
) -> FormalSum<StrongComposition> {
    let mut out = FormalSum::new();
    let mut cur = Vec::new();
    overlap_rec(alpha.entries(), beta.entries(), &mut cur, &mut out);
    out
}

fn overlap_rec(
    a: &[u32],
    b: &[u32],
    cur: &mut Vec<u32>,
    out: &mut FormalSum<StrongComposition>,
) {
    if a.is_empty() && b.is_empty() {
        out.add_term(StrongComposition::new_unchecked(cur.clone()), 1);
        return;
    }
    if let Some((&x, rest)) = a.split_first() {
        cur.push(x);
        overlap_rec(rest, b, cur, out);
        cur.pop();
    }
    if let Some((&y, rest)) = b.split_first() {
        cur.push(y);
        overlap_rec(a, rest, cur, out);
        cur.pop();
    }
    if let (Some((&x, ra)), Some((&y, rb))) = (a.split_first(), b.split_first()) {
        cur.push(x + y);
        overlap_rec(ra, rb, cur, out);
        cur.pop();
    }
}
