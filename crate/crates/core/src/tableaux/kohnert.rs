//! Box diagrams and their closure under Kohnert moves.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::combinat::{Permutation, WeakComposition, rothe_diagram};

/// A finite set of boxes `(row, column)`, 1-based, row 1 at the top.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoxDiagram {
    boxes: BTreeSet<(usize, usize)>,
}

impl BoxDiagram {
    pub fn new(boxes: impl IntoIterator<Item = (usize, usize)>) -> Self {
        BoxDiagram {
            boxes: boxes.into_iter().collect(),
        }
    }

    /// Left-justified rows of lengths `a_1, a_2, …`.
    pub fn of_composition(a: &WeakComposition) -> Self {
        Self::new(
            a.entries()
                .iter()
                .enumerate()
                .flat_map(|(i, &len)| (1..=len as usize).map(move |c| (i + 1, c))),
        )
    }

    pub fn rothe(p: &Permutation) -> Self {
        Self::new(rothe_diagram(p))
    }

    pub fn boxes(&self) -> &BTreeSet<(usize, usize)> {
        &self.boxes
    }

    /// Boxes per row, as a composition of length `n`.
    pub fn weight(&self, n: usize) -> WeakComposition {
        let mut w = vec![0u32; n];
        for &(r, _) in &self.boxes {
            w[r - 1] += 1;
        }
        WeakComposition::new(w)
    }

    /// The diagram after moving the rightmost box of `row` to the nearest
    /// empty cell above it, if there is one.
    pub fn kohnert_move(&self, row: usize) -> Option<BoxDiagram> {
        let &(_, col) = self.boxes.iter().rfind(|&&(r, _)| r == row)?;
        let target = (1..row).rev().find(|&r| !self.boxes.contains(&(r, col)))?;
        let mut boxes = self.boxes.clone();
        boxes.remove(&(row, col));
        boxes.insert((target, col));
        Some(BoxDiagram { boxes })
    }
}

impl fmt::Display for BoxDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.boxes.iter().map(|(r, c)| format!("({r},{c})")).collect();
        write!(f, "{{{}}}", cells.join(","))
    }
}

/// All diagrams reachable from `d` by Kohnert moves, sorted.
pub fn kohnert_closure(d: &BoxDiagram) -> Vec<BoxDiagram> {
    let mut seen: HashSet<BoxDiagram> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(d.clone());
    queue.push_back(d.clone());
    while let Some(cur) = queue.pop_front() {
        let rows: BTreeSet<usize> = cur.boxes.iter().map(|&(r, _)| r).collect();
        for r in rows {
            if let Some(next) = cur.kohnert_move(r) {
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    let mut out: Vec<BoxDiagram> = seen.into_iter().collect();
    out.sort();
    out
}
