//! Slide and overlapping slide products of weak compositions.

use super::shuffle::{shuffles, ShuffleWord};
use crate::combinat::enumerate::placements;
use crate::combinat::{dominance_leq, FormalSum, WeakComposition};
use crate::error::{Error, Result};
use crate::tableaux::runs;

/// Increasing position sequences `p_1 < … < p_r` in `0..slots`.
fn slot_choices(r: usize, slots: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    slot_rec(r, slots, 0, &mut cur, &mut out);
    out
}

fn slot_rec(r: usize, slots: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == r {
        out.push(cur.clone());
        return;
    }
    for p in start..slots {
        if slots - p < r - cur.len() {
            break;
        }
        cur.push(p);
        slot_rec(r, slots, p + 1, cur, out);
        cur.pop();
    }
}

fn spread(values: &[u32], positions: &[usize], len: usize) -> WeakComposition {
    let mut v = vec![0u32; len];
    for (&x, &p) in values.iter().zip(positions) {
        v[p] = x;
    }
    WeakComposition::new(v)
}

/// The unique dominance-least element of `candidates`, which must lie
/// below every other.
fn unique_least(candidates: Vec<WeakComposition>, what: impl Fn() -> String) -> Result<WeakComposition> {
    let least = candidates
        .iter()
        .find(|c| candidates.iter().all(|d| dominance_leq(c, d)))
        .cloned();
    least.ok_or_else(|| Error::BumpNonUnique(what()))
}

/// Counts of odd and even letters in each run of `c`.
fn run_counts(c: &[u32]) -> (Vec<u32>, Vec<u32>) {
    runs(c)
        .iter()
        .map(|run| {
            let odd = run.iter().filter(|&&x| x % 2 == 1).count() as u32;
            (odd, run.len() as u32 - odd)
        })
        .unzip()
}

/// `Σ Comp(BumpRuns(C))` over shuffles `C` of the encoded words whose run
/// compositions dominate `a` and `b`. Results have length
/// `max(ℓ(a), ℓ(b))`.
pub fn slide_product(a: &WeakComposition, b: &WeakComposition) -> Result<FormalSum<WeakComposition>> {
    let len = a.len().max(b.len());
    let (a, b) = (a.padded(len), b.padded(len));
    let wa = ShuffleWord::odd(a.entries());
    let wb = ShuffleWord::even(b.entries());
    let mut out = FormalSum::new();
    for c in shuffles(wa.letters(), wb.letters()) {
        let (odd, even) = run_counts(&c);
        if odd.len() > len
            || !dominance_leq(&a, &WeakComposition::new(odd.clone()))
            || !dominance_leq(&b, &WeakComposition::new(even.clone()))
        {
            continue;
        }
        let totals: Vec<u32> = odd.iter().zip(&even).map(|(x, y)| x + y).collect();
        let admissible: Vec<WeakComposition> = slot_choices(totals.len(), len)
            .into_iter()
            .filter(|p| {
                dominance_leq(&a, &spread(&odd, p, len)) && dominance_leq(&b, &spread(&even, p, len))
            })
            .map(|p| spread(&totals, &p, len))
            .collect();
        let bumped = unique_least(admissible, || format!("{c:?}"))?;
        out.add_term(bumped, 1);
    }
    Ok(out)
}

/// `Σ Bump(a', b')` over pairs `(a', b')` of equal length `k` with
/// `a'⁺ = a⁺`, `b'⁺ = b⁺`, `a' ≥ a`, `b' ≥ b` and no column empty in both.
pub fn overlapping_slide_product(
    a: &WeakComposition,
    b: &WeakComposition,
) -> Result<FormalSum<WeakComposition>> {
    let len = a.len().max(b.len());
    let (a, b) = (a.padded(len), b.padded(len));
    let (ap, bp) = (a.positive_part(), b.positive_part());
    let mut out = FormalSum::new();
    for k in ap.len().max(bp.len())..=len {
        let a_primes: Vec<WeakComposition> = placements(&ap, k)
            .into_iter()
            .filter(|x| dominance_leq(&a, x))
            .collect();
        let b_primes: Vec<WeakComposition> = placements(&bp, k)
            .into_iter()
            .filter(|y| dominance_leq(&b, y))
            .collect();
        for x in &a_primes {
            for y in &b_primes {
                if x.entries().iter().zip(y.entries()).any(|(p, q)| p + q == 0) {
                    continue;
                }
                let sum: Vec<u32> = x.entries().iter().zip(y.entries()).map(|(p, q)| p + q).collect();
                let admissible: Vec<WeakComposition> = slot_choices(k, len)
                    .into_iter()
                    .filter(|p| {
                        dominance_leq(&a, &spread(x.entries(), p, len))
                            && dominance_leq(&b, &spread(y.entries(), p, len))
                    })
                    .map(|p| spread(&sum, &p, len))
                    .collect();
                let bumped = unique_least(admissible, || format!("{x}, {y}"))?;
                out.add_term(bumped, 1);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[u32]) -> WeakComposition {
        WeakComposition::new(v.to_vec())
    }

    #[test]
    fn zero_factor() {
        let a = w(&[1, 0, 2]);
        assert_eq!(slide_product(&a, &w(&[0, 0, 0])).unwrap().to_string(), "1*(1,0,2)");
        assert_eq!(
            overlapping_slide_product(&a, &w(&[0, 0, 0])).unwrap().to_string(),
            "1*(1,0,2)"
        );
    }

    #[test]
    fn single_variable() {
        assert_eq!(slide_product(&w(&[1]), &w(&[1])).unwrap().to_string(), "1*(2)");
        assert_eq!(overlapping_slide_product(&w(&[1]), &w(&[1])).unwrap().to_string(), "1*(2)");
    }

    #[test]
    fn slot_counts() {
        assert_eq!(slot_choices(2, 4).len(), 6);
        assert_eq!(slot_choices(0, 3).len(), 1);
        assert_eq!(slot_choices(3, 2).len(), 0);
    }
}
