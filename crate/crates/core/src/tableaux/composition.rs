//! Semistandard composition tableaux, key semi-skyline fillings, and the
//! filters used by the quasisymmetric and asymmetric expansion rules.
//!
//! Rows are numbered from 1 at the top. Column 0 is the basement when one
//! is present; ordinary boxes occupy columns `1..=row length`.

use std::collections::BTreeSet;
use std::fmt;

use crate::combinat::WeakComposition;

/// A filling of a weak-composition diagram, optionally with a basement.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompositionTableau {
    basement: Option<Vec<u32>>,
    rows: Vec<Vec<u32>>,
}

impl CompositionTableau {
    pub fn new(rows: Vec<Vec<u32>>, basement: Option<Vec<u32>>) -> Self {
        if let Some(b) = &basement {
            assert_eq!(b.len(), rows.len(), "basement must have one entry per row");
        }
        CompositionTableau { basement, rows }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn basement(&self) -> Option<&[u32]> {
        self.basement.as_deref()
    }

    pub fn shape(&self) -> WeakComposition {
        WeakComposition::new(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    /// Label at 0-based row `r` and column `c` (0 is the basement).
    pub fn label(&self, r: usize, c: usize) -> Option<u32> {
        if c == 0 {
            self.basement.as_ref().map(|b| b[r])
        } else {
            self.rows.get(r).and_then(|row| row.get(c - 1)).copied()
        }
    }

    /// `weight_i` counts occurrences of the label `i`; length `n`.
    pub fn weight(&self, n: usize) -> WeakComposition {
        let mut w = vec![0u32; n];
        for &x in self.rows.iter().flatten() {
            w[x as usize - 1] += 1;
        }
        WeakComposition::new(w)
    }

    pub fn labels(&self) -> BTreeSet<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Labels `(X, Y, Z)` of every triple between rows `r1 < r2`.
    fn triples_between(&self, r1: usize, r2: usize) -> Vec<(u32, u32, u32)> {
        let (l1, l2) = (self.rows[r1].len(), self.rows[r2].len());
        let c0 = if self.basement.is_some() { 0 } else { 1 };
        let mut out = Vec::new();
        if l1 >= l2 {
            for c in c0..l2 {
                let z = self.label(r1, c).expect("upper row covers column");
                let x = self.label(r1, c + 1).expect("upper row covers column");
                let y = self.label(r2, c + 1).expect("lower row covers column");
                out.push((x, y, z));
            }
        } else {
            for c in c0..=l1 {
                let y = self.label(r1, c).expect("upper row covers column");
                let z = self.label(r2, c).expect("lower row covers column");
                let x = self.label(r2, c + 1).expect("lower row covers column");
                out.push((x, y, z));
            }
        }
        out
    }

    /// All triples as label tuples `(X, Y, Z)`.
    pub fn triples(&self) -> Vec<(u32, u32, u32)> {
        let mut out = Vec::new();
        for r2 in 0..self.rows.len() {
            for r1 in 0..r2 {
                out.extend(self.triples_between(r1, r2));
            }
        }
        out
    }

    /// No repeated label in a column, weakly decreasing rows (basement
    /// included) and every triple an inversion triple.
    pub fn is_semistandard(&self) -> bool {
        let width = self.rows.iter().map(|r| r.len()).max().unwrap_or(0);
        for c in 1..=width {
            let mut seen = BTreeSet::new();
            for r in 0..self.rows.len() {
                if let Some(x) = self.label(r, c) {
                    if !seen.insert(x) {
                        return false;
                    }
                }
            }
        }
        for r in 0..self.rows.len() {
            let c0 = if self.basement.is_some() { 0 } else { 1 };
            for c in c0..self.rows[r].len() {
                if self.label(r, c) < self.label(r, c + 1) {
                    return false;
                }
            }
        }
        self.rows.iter().flatten().all(|&x| x >= 1)
            && self.triples().into_iter().all(is_inversion)
    }

    /// Semistandard without a basement, with first-column labels equal to
    /// their row index.
    pub fn is_atom_tableau(&self) -> bool {
        self.basement.is_none()
            && self
                .rows
                .iter()
                .enumerate()
                .all(|(r, row)| row.first().is_none_or(|&x| x as usize == r + 1))
            && self.is_semistandard()
    }

    fn first_column_labels(&self) -> BTreeSet<u32> {
        self.rows.iter().filter_map(|r| r.first().copied()).collect()
    }

    /// Minimum and maximum column of each label.
    fn column_ranges(&self) -> std::collections::BTreeMap<u32, (usize, usize)> {
        let mut m = std::collections::BTreeMap::new();
        for row in &self.rows {
            for (k, &x) in row.iter().enumerate() {
                let c = k + 1;
                let e = m.entry(x).or_insert((c, c));
                e.0 = e.0.min(c);
                e.1 = e.1.max(c);
            }
        }
        m
    }

    fn highest_condition(&self, next: impl Fn(u32) -> Option<u32>) -> bool {
        let first = self.first_column_labels();
        let ranges = self.column_ranges();
        ranges.iter().all(|(&i, &(min_i, _))| {
            first.contains(&i)
                || next(i)
                    .and_then(|j| ranges.get(&j))
                    .is_some_and(|&(_, max_j)| max_j >= min_i)
        })
    }

    /// Every label `i` lies in the first column or has an `i+1` weakly right
    /// of some `i`.
    pub fn is_quasi_yamanouchi(&self) -> bool {
        self.highest_condition(|i| Some(i + 1))
    }

    /// Like [`Self::is_quasi_yamanouchi`] with `i+1` replaced by the next
    /// larger label present.
    pub fn is_particle_highest(&self) -> bool {
        let labels = self.labels();
        self.highest_condition(|i| labels.range(i + 1..).next().copied())
    }

    /// The labels present form `{1, …, k}`.
    pub fn is_initial(&self) -> bool {
        self.labels().iter().enumerate().all(|(k, &x)| x as usize == k + 1)
    }

    /// Every label of a higher nonempty row is smaller than every label of
    /// a lower one.
    pub fn is_particle(&self) -> bool {
        let mut prev_max = 0;
        for row in self.rows.iter().filter(|r| !r.is_empty()) {
            let min = *row.iter().min().unwrap();
            if min <= prev_max {
                return false;
            }
            prev_max = *row.iter().max().unwrap();
        }
        true
    }
}

/// A triple is an inversion triple unless `X ≤ Y ≤ Z`.
pub fn is_inversion((x, y, z): (u32, u32, u32)) -> bool {
    !(x <= y && y <= z)
}

impl fmt::Display for CompositionTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                f.write_str("/")?;
            }
            if let Some(b) = &self.basement {
                write!(f, "[{}]", b[r])?;
            }
            for x in row {
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

struct Filler<'a> {
    lens: &'a [usize],
    basement: Option<&'a [u32]>,
    fix_first_column: bool,
    max_label: u32,
    rows: Vec<Vec<u32>>,
    out: Vec<CompositionTableau>,
}

impl Filler<'_> {
    fn run(mut self) -> Vec<CompositionTableau> {
        self.fill_row(0);
        self.out
    }

    fn fill_row(&mut self, r: usize) {
        if r == self.lens.len() {
            self.out.push(CompositionTableau::new(
                self.rows.clone(),
                self.basement.map(|b| b.to_vec()),
            ));
            return;
        }
        if self.lens[r] == 0 {
            self.rows.push(Vec::new());
            self.fill_row(r + 1);
            self.rows.pop();
            return;
        }
        self.rows.push(Vec::with_capacity(self.lens[r]));
        self.fill_cell(r);
        self.rows.pop();
    }

    fn fill_cell(&mut self, r: usize) {
        let k = self.rows[r].len();
        if k == self.lens[r] {
            if self.row_triples_ok(r) {
                self.fill_row(r + 1);
            }
            return;
        }
        let (lo, hi) = if k == 0 && self.fix_first_column {
            (r as u32 + 1, r as u32 + 1)
        } else if k == 0 {
            let cap = self.basement.map_or(self.max_label, |b| b[r]);
            (1, cap.min(self.max_label))
        } else {
            (1, self.rows[r][k - 1])
        };
        for x in lo..=hi {
            let column_clash = (0..r).any(|q| self.rows[q].get(k) == Some(&x));
            if column_clash {
                continue;
            }
            self.rows[r].push(x);
            self.fill_cell(r);
            self.rows[r].pop();
        }
    }

    fn row_triples_ok(&self, r2: usize) -> bool {
        let probe = CompositionTableau {
            basement: self.basement.map(|b| b[..=r2].to_vec()),
            rows: self.rows.clone(),
        };
        (0..r2).all(|r1| probe.triples_between(r1, r2).into_iter().all(is_inversion))
    }
}

/// Semistandard composition tableaux of shape `a` (labels at most `a.len()`).
pub fn enumerate_composition_tableaux(a: &WeakComposition) -> Vec<CompositionTableau> {
    let lens: Vec<usize> = a.entries().iter().map(|&x| x as usize).collect();
    Filler {
        lens: &lens,
        basement: None,
        fix_first_column: true,
        max_label: a.len() as u32,
        rows: Vec::new(),
        out: Vec::new(),
    }
    .run()
}

/// Composition tableaux of shape `a` whose row label sets increase strictly
/// from top to bottom.
pub fn enumerate_particle_tableaux(a: &WeakComposition) -> Vec<CompositionTableau> {
    enumerate_composition_tableaux(a)
        .into_iter()
        .filter(|t| t.is_particle())
        .collect()
}

/// Key semi-skyline fillings for `a`: fillings of the diagram of `rev(a)`
/// with basement `n+1-i` in row `i`.
pub fn enumerate_key_skylines(a: &WeakComposition) -> Vec<CompositionTableau> {
    let n = a.len();
    let lens: Vec<usize> = a.entries().iter().rev().map(|&x| x as usize).collect();
    let basement: Vec<u32> = (1..=n).map(|i| (n + 1 - i) as u32).collect();
    Filler {
        lens: &lens,
        basement: Some(&basement),
        fix_first_column: false,
        max_label: n as u32,
        rows: Vec::new(),
        out: Vec::new(),
    }
    .run()
}
