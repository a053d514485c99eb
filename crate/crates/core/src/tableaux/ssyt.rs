//! Semistandard Young tableaux of straight and skew shape.

use std::fmt;

use crate::combinat::{Partition, WeakComposition};

/// A filling of `outer / inner`. Row `r` stores labels for columns
/// `inner_r .. outer_r` (0-based), left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ssyt {
    outer: Partition,
    inner: Partition,
    rows: Vec<Vec<u32>>,
}

impl Ssyt {
    /// Builds a tableau from rows of labels; returns `None` when the rows do
    /// not fit the shape or the filling is not semistandard.
    pub fn new(outer: Partition, inner: Partition, rows: Vec<Vec<u32>>) -> Option<Self> {
        let t = Ssyt { outer, inner, rows };
        t.is_semistandard().then_some(t)
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    fn label(&self, r: usize, c: usize) -> Option<u32> {
        let start = self.inner.part(r) as usize;
        if c < start {
            return None;
        }
        self.rows.get(r).and_then(|row| row.get(c - start)).copied()
    }

    /// Independent check of shape, row and column conditions.
    pub fn is_semistandard(&self) -> bool {
        if !self.outer.contains(&self.inner) || self.rows.len() != self.outer.len() {
            return false;
        }
        for (r, row) in self.rows.iter().enumerate() {
            let start = self.inner.part(r) as usize;
            if row.len() != self.outer.part(r) as usize - start {
                return false;
            }
            if row.contains(&0) || row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if r > 0 {
                for (k, &x) in row.iter().enumerate() {
                    if let Some(above) = self.label(r - 1, start + k) {
                        if above >= x {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// `weight_i` counts the label `i`; the result has length `n`.
    pub fn weight(&self, n: usize) -> WeakComposition {
        let mut w = vec![0u32; n];
        for &x in self.rows.iter().flatten() {
            w[x as usize - 1] += 1;
        }
        WeakComposition::new(w)
    }

    /// Rows top to bottom, each read right to left.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows
            .iter()
            .flat_map(|row| row.iter().rev().copied())
            .collect()
    }

    /// Every prefix of the reading word has at least as many `i` as `i+1`.
    pub fn is_yamanouchi(&self) -> bool {
        is_yamanouchi_word(&self.reading_word())
    }
}

/// Rows joined by `/`, skipped cells of the inner shape shown as `.`.
impl fmt::Display for Ssyt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                f.write_str("/")?;
            }
            for _ in 0..self.inner.part(r) {
                f.write_str(".")?;
            }
            for x in row {
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

pub fn is_yamanouchi_word(word: &[u32]) -> bool {
    let max = word.iter().copied().max().unwrap_or(0) as usize;
    let mut counts = vec![0u32; max + 2];
    for &x in word {
        let x = x as usize;
        counts[x] += 1;
        if x > 1 && counts[x] > counts[x - 1] {
            return false;
        }
    }
    true
}

/// All semistandard fillings of `outer / inner` with labels in `1..=max_label`.
pub fn enumerate_ssyt(outer: &Partition, inner: &Partition, max_label: u32) -> Vec<Ssyt> {
    enumerate_with(outer, inner, max_label, None)
}

/// Semistandard fillings of `outer / inner` with the given content.
pub fn enumerate_ssyt_with_content(
    outer: &Partition,
    inner: &Partition,
    content: &WeakComposition,
) -> Vec<Ssyt> {
    enumerate_with(outer, inner, content.len() as u32, Some(content.entries()))
}

fn enumerate_with(
    outer: &Partition,
    inner: &Partition,
    max_label: u32,
    content: Option<&[u32]>,
) -> Vec<Ssyt> {
    if !outer.contains(inner) {
        return Vec::new();
    }
    let cells: Vec<(usize, usize)> = (0..outer.len())
        .flat_map(|r| (inner.part(r) as usize..outer.part(r) as usize).map(move |c| (r, c)))
        .collect();
    if let Some(content) = content {
        if content.iter().map(|&x| x as usize).sum::<usize>() != cells.len() {
            return Vec::new();
        }
    }
    let width = outer.part(0) as usize;
    let mut grid = vec![vec![0u32; width]; outer.len()];
    let mut remaining: Vec<u32> = content.map(|c| c.to_vec()).unwrap_or_default();
    let mut out = Vec::new();
    fill(
        &cells, 0, &mut grid, inner, max_label, content.is_some(), &mut remaining, &mut |g| {
            let rows = (0..outer.len())
                .map(|r| g[r][inner.part(r) as usize..outer.part(r) as usize].to_vec())
                .collect();
            out.push(Ssyt {
                outer: outer.clone(),
                inner: inner.clone(),
                rows,
            });
        },
    );
    out
}

#[allow(clippy::too_many_arguments)]
fn fill(
    cells: &[(usize, usize)],
    k: usize,
    grid: &mut Vec<Vec<u32>>,
    inner: &Partition,
    max_label: u32,
    restricted: bool,
    remaining: &mut Vec<u32>,
    emit: &mut dyn FnMut(&Vec<Vec<u32>>),
) {
    if k == cells.len() {
        emit(grid);
        return;
    }
    let (r, c) = cells[k];
    let mut lo = 1;
    if c > inner.part(r) as usize {
        lo = lo.max(grid[r][c - 1]);
    }
    if r > 0 && c >= inner.part(r - 1) as usize {
        lo = lo.max(grid[r - 1][c] + 1);
    }
    for x in lo..=max_label {
        if restricted {
            if remaining[x as usize - 1] == 0 {
                continue;
            }
            remaining[x as usize - 1] -= 1;
        }
        grid[r][c] = x;
        fill(cells, k + 1, grid, inner, max_label, restricted, remaining, emit);
        if restricted {
            remaining[x as usize - 1] += 1;
        }
    }
    grid[r][c] = 0;
}
