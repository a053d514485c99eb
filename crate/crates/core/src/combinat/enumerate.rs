//! Exhaustive generators for index species.

use super::composition::{Partition, StrongComposition, WeakComposition};

/// Weak compositions of `degree` with exactly `len` entries, lexicographic.
pub fn weak_compositions(degree: u32, len: usize) -> Vec<WeakComposition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    weak_rec(degree, len, &mut cur, &mut out);
    out
}

fn weak_rec(rem: u32, len: usize, cur: &mut Vec<u32>, out: &mut Vec<WeakComposition>) {
    if cur.len() + 1 == len {
        cur.push(rem);
        out.push(WeakComposition::new(cur.clone()));
        cur.pop();
        return;
    }
    if len == 0 {
        if rem == 0 {
            out.push(WeakComposition::default());
        }
        return;
    }
    for e in 0..=rem {
        cur.push(e);
        weak_rec(rem - e, len, cur, out);
        cur.pop();
    }
}

/// All sequences of length `len` with entries in `0..=max_entry`.
pub fn bounded_weak_compositions(max_entry: u32, len: usize) -> Vec<WeakComposition> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..=max_entry).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(WeakComposition::new).collect()
}

/// Strong compositions of `degree`.
pub fn strong_compositions(degree: u32) -> Vec<StrongComposition> {
    let mut out = Vec::new();
    strong_rec(degree, &mut Vec::new(), &mut out);
    out
}

fn strong_rec(rem: u32, cur: &mut Vec<u32>, out: &mut Vec<StrongComposition>) {
    if rem == 0 {
        out.push(StrongComposition::new_unchecked(cur.clone()));
        return;
    }
    for e in 1..=rem {
        cur.push(e);
        strong_rec(rem - e, cur, out);
        cur.pop();
    }
}

/// Partitions of `degree`, in reverse lexicographic order.
pub fn partitions(degree: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    partition_rec(degree, degree, &mut Vec::new(), &mut out);
    out
}

fn partition_rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition::new_unchecked(cur.clone()));
        return;
    }
    for e in (1..=rem.min(max)).rev() {
        cur.push(e);
        partition_rec(rem - e, e, cur, out);
        cur.pop();
    }
}

/// Partitions of `degree` with at most `max_len` parts.
pub fn partitions_max_len(degree: u32, max_len: usize) -> Vec<Partition> {
    partitions(degree)
        .into_iter()
        .filter(|p| p.len() <= max_len)
        .collect()
}

/// Distinct rearrangements of `entries`, lexicographic.
pub fn rearrangements(entries: &[u32]) -> Vec<WeakComposition> {
    let mut cur = entries.to_vec();
    cur.sort_unstable();
    let mut out = vec![WeakComposition::new(cur.clone())];
    while let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) {
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(WeakComposition::new(cur.clone()));
    }
    out
}

/// Weak compositions of length `n` whose positive part is `alpha`.
pub fn placements(alpha: &StrongComposition, n: usize) -> Vec<WeakComposition> {
    let parts = alpha.entries();
    let mut out = Vec::new();
    if parts.len() > n {
        return out;
    }
    let mut cur = vec![0u32; n];
    place_rec(parts, 0, &mut cur, &mut out);
    out
}

fn place_rec(parts: &[u32], start: usize, cur: &mut Vec<u32>, out: &mut Vec<WeakComposition>) {
    if parts.is_empty() {
        out.push(WeakComposition::new(cur.clone()));
        return;
    }
    let n = cur.len();
    for pos in start..=n - parts.len() {
        cur[pos] = parts[0];
        place_rec(&parts[1..], pos + 1, cur, out);
        cur[pos] = 0;
    }
}

/// Strong compositions refining `alpha`.
pub fn refinements(alpha: &StrongComposition) -> Vec<StrongComposition> {
    let mut acc: Vec<Vec<u32>> = vec![Vec::new()];
    for &part in alpha.entries() {
        let pieces = strong_compositions(part);
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                pieces.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.extend_from_slice(p.entries());
                    v
                })
            })
            .collect();
    }
    acc.into_iter().map(StrongComposition::new_unchecked).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(weak_compositions(3, 3).len(), 10);
        assert_eq!(weak_compositions(0, 0).len(), 1);
        assert_eq!(weak_compositions(2, 0).len(), 0);
        assert_eq!(bounded_weak_compositions(3, 4).len(), 256);
        assert_eq!(strong_compositions(4).len(), 8);
        assert_eq!(strong_compositions(0).len(), 1);
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(partitions(0).len(), 1);
        assert_eq!(partitions_max_len(5, 2).len(), 3);
        assert_eq!(rearrangements(&[1, 0, 1]).len(), 3);
        assert_eq!(rearrangements(&[]).len(), 1);
        let a = StrongComposition::new(vec![1, 3]).unwrap();
        assert_eq!(placements(&a, 3).len(), 3);
        assert_eq!(placements(&a, 1).len(), 0);
        assert_eq!(refinements(&a).len(), 4);
    }
}
