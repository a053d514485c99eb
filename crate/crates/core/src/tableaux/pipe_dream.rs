//! Pipe dreams stored as finite sets of crossing tiles; every other tile is
//! an elbow. Rows and columns are 1-based, row 1 at the top.

use std::collections::BTreeSet;
use std::fmt;

use crate::combinat::{Permutation, WeakComposition};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PipeDream {
    crosses: BTreeSet<(usize, usize)>,
}

impl PipeDream {
    pub fn new(crosses: impl IntoIterator<Item = (usize, usize)>) -> Self {
        PipeDream {
            crosses: crosses.into_iter().collect(),
        }
    }

    pub fn crosses(&self) -> &BTreeSet<(usize, usize)> {
        &self.crosses
    }

    /// Crossing tiles per row, as a composition of length `n`.
    pub fn weight(&self, n: usize) -> WeakComposition {
        let mut w = vec![0u32; n];
        for &(r, _) in &self.crosses {
            w[r - 1] += 1;
        }
        WeakComposition::new(w)
    }

    fn extent(&self) -> usize {
        self.crosses.iter().map(|&(r, c)| r + c).max().unwrap_or(1)
    }

    /// Follows the pipe entering row `i` from the west and returns the
    /// column where it leaves through the top, with the crossing tiles it
    /// passes through.
    fn trace_pipe(&self, i: usize) -> (usize, Vec<(usize, usize)>) {
        let (mut r, mut c) = (i, 1);
        let mut heading_east = true;
        let mut passed = Vec::new();
        while r > 0 {
            let cross = self.crosses.contains(&(r, c));
            if cross {
                passed.push((r, c));
                if heading_east {
                    c += 1;
                } else {
                    r -= 1;
                }
            } else if heading_east {
                heading_east = false;
                r -= 1;
            } else {
                heading_east = true;
                c += 1;
            }
        }
        (c, passed)
    }

    /// The permutation read off from pipe exits, on `{1, …, m}` with `m`
    /// large enough to hold every crossing.
    pub fn permutation(&self) -> Permutation {
        let m = self.extent();
        let exits: Vec<usize> = (1..=m).map(|i| self.trace_pipe(i).0).collect();
        Permutation::new(exits)
            .expect("pipes of a finite tiling exit in distinct columns")
            .trimmed()
    }

    /// No two pipes cross more than once.
    pub fn is_reduced(&self) -> bool {
        let m = self.extent();
        let mut owner = std::collections::HashMap::new();
        let mut pairs = BTreeSet::new();
        for i in 1..=m {
            for cell in self.trace_pipe(i).1 {
                if let Some(j) = owner.insert(cell, i) {
                    if !pairs.insert((j, i)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The leftmost cross of each row is in column 1 or weakly left of some
    /// cross in the row below.
    pub fn is_quasi_yamanouchi(&self) -> bool {
        let rows: BTreeSet<usize> = self.crosses.iter().map(|&(r, _)| r).collect();
        rows.into_iter().all(|r| {
            let leftmost = self.crosses.iter().filter(|&&(q, _)| q == r).map(|&(_, c)| c).min().unwrap();
            leftmost == 1 || self.crosses.iter().any(|&(q, c)| q == r + 1 && c >= leftmost)
        })
    }
}

impl fmt::Display for PipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.crosses.iter().map(|(r, c)| format!("({r},{c})")).collect();
        write!(f, "{{{}}}", cells.join(","))
    }
}

/// All reduced pipe dreams for `p`.
///
/// Crosses are chosen in the staircase `r + c ≤ N` in reading order (rows
/// top to bottom, each right to left); the cross at `(r, c)` contributes
/// the letter `r + c − 1`, and the letters must spell a prefix of a
/// reduced word of `p`.
pub fn enumerate_pipe_dreams(p: &Permutation) -> Vec<PipeDream> {
    let p = p.trimmed();
    let n = p.size();
    let cells: Vec<(usize, usize)> = (1..n)
        .flat_map(|r| (1..=n - r).rev().map(move |c| (r, c)))
        .collect();
    let target_len = p.length();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    search(
        &cells,
        0,
        &Permutation::identity(n),
        &p,
        target_len,
        &mut chosen,
        &mut out,
    );
    for d in &out {
        debug_assert!(d.is_reduced() && d.permutation() == p);
    }
    out.sort();
    out
}

fn search(
    cells: &[(usize, usize)],
    k: usize,
    q: &Permutation,
    target: &Permutation,
    target_len: usize,
    chosen: &mut Vec<(usize, usize)>,
    out: &mut Vec<PipeDream>,
) {
    let len = chosen.len();
    if len == target_len {
        if q == target {
            out.push(PipeDream::new(chosen.iter().copied()));
        }
        return;
    }
    if cells.len() - k < target_len - len {
        return;
    }
    let (r, c) = cells[k];
    let letter = r + c - 1;
    if q.apply(letter) < q.apply(letter + 1) {
        let next = q.swap_positions(letter);
        let rest = next.inverse().compose(target);
        if rest.length() == target_len - len - 1 {
            chosen.push((r, c));
            search(cells, k + 1, &next, target, target_len, chosen, out);
            chosen.pop();
        }
    }
    search(cells, k + 1, q, target, target_len, chosen, out);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn example_1432() {
        let d = PipeDream::new([(1, 2), (2, 1), (2, 2)]);
        assert_eq!(d.permutation(), perm("1432"));
        assert!(d.is_reduced());
        assert_eq!(d.weight(3).entries(), &[1, 2, 0]);
        assert!(enumerate_pipe_dreams(&perm("1432")).contains(&d));
    }

    #[test]
    fn example_15324() {
        let ds = enumerate_pipe_dreams(&perm("15324"));
        assert_eq!(ds.len(), 7);
        let mut w: Vec<String> = ds.iter().map(|d| d.weight(3).to_string()).collect();
        w.sort();
        assert_eq!(
            w,
            vec!["(0,3,1)", "(1,2,1)", "(1,3,0)", "(2,1,1)", "(2,2,0)", "(3,0,1)", "(3,1,0)"]
        );
    }

    #[test]
    fn identity_and_nonreduced() {
        assert_eq!(enumerate_pipe_dreams(&perm("123")), vec![PipeDream::default()]);
        let d = PipeDream::new([(1, 1), (1, 2), (2, 1)]);
        assert!(d.is_reduced());
        let twice = PipeDream::new([(1, 1), (2, 1)]);
        assert!(twice.is_reduced());
        let bad = PipeDream::new([(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (1, 3)]);
        assert_eq!(bad.permutation().length() == bad.crosses().len(), bad.is_reduced());
    }

    #[test]
    fn quasi_yamanouchi_examples() {
        assert!(PipeDream::default().is_quasi_yamanouchi());
        assert!(PipeDream::new([(1, 1)]).is_quasi_yamanouchi());
        assert!(!PipeDream::new([(1, 2)]).is_quasi_yamanouchi());
        assert!(PipeDream::new([(1, 2), (2, 1), (2, 2)]).is_quasi_yamanouchi());
        assert!(!PipeDream::new([(1, 2), (2, 2)]).is_quasi_yamanouchi());
    }
}
