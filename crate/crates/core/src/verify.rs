//! Exhaustive sweeps comparing independent constructions.
//!
//! Each sweep returns a [`SweepReport`] listing every failure; nothing
//! panics on disagreement.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bases::{
    basis_polynomial, indices_of_degree, key_alternatives, schubert_alternatives,
    schur_alternatives, BasisId, BasisIndex, Species,
};
use crate::combinat::enumerate::{bounded_weak_compositions, partitions, weak_compositions};
use crate::combinat::{Partition, Permutation, StrongComposition};
use crate::error::{Error, Result};
use crate::expand::{
    combinatorial_expansion, compose_expansion, expand_via_solver, round_trip, rule_pairs,
    verify_expansion, BasisExpansion,
};
use crate::products::{combinatorial_product, structure_constants, ProductRule};

/// Outcome of one sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl SweepReport {
    fn new(name: &str) -> Self {
        SweepReport {
            name: name.to_string(),
            ..Default::default()
        }
    }

    fn record(&mut self, outcome: std::result::Result<(), String>) {
        self.checked += 1;
        if let Err(msg) = outcome {
            self.failures.push(msg);
        }
    }

    fn collect(name: &str, outcomes: Vec<std::result::Result<(), String>>) -> Self {
        let mut r = SweepReport::new(name);
        for o in outcomes {
            r.record(o);
        }
        r
    }

    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `name checked OK` or `name checked MISMATCH k entries`, then one line per
/// failure.
impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            writeln!(f, "{} {} OK", self.name, self.checked)?;
        } else {
            writeln!(
                f,
                "{} {} MISMATCH {} entries",
                self.name,
                self.checked,
                self.failures.len()
            )?;
            for msg in &self.failures {
                writeln!(f, "  {msg}")?;
            }
        }
        for note in &self.notes {
            writeln!(f, "  note: {note}")?;
        }
        Ok(())
    }
}

/// Indices of `basis` with entries at most `max_entry` and length at most
/// `max_len`, each paired with its number of variables. Weak compositions
/// use their own length; other species use `max_len`. Permutations range
/// over `S_{max_len}`.
pub fn sweep_indices(basis: BasisId, max_entry: u32, max_len: usize) -> Vec<(BasisIndex, usize)> {
    match basis.species() {
        Species::WeakComposition => (1..=max_len)
            .flat_map(|len| {
                bounded_weak_compositions(max_entry, len)
                    .into_iter()
                    .map(move |a| (BasisIndex::Weak(a), len))
            })
            .collect(),
        Species::StrongComposition => (1..=max_len)
            .flat_map(|len| bounded_weak_compositions(max_entry - 1, len))
            .map(|a| {
                let parts = a.entries().iter().map(|x| x + 1).collect();
                let alpha = StrongComposition::new(parts).expect("entries are positive");
                (BasisIndex::Strong(alpha), max_len)
            })
            .collect(),
        Species::Partition => (0..=max_entry as usize * max_len)
            .flat_map(|d| partitions(d as u32))
            .filter(|l| l.len() <= max_len && l.part(0) <= max_entry)
            .map(|l| (BasisIndex::Partition(l), max_len))
            .collect(),
        Species::Permutation => Permutation::all(max_len)
            .into_iter()
            .map(|p| (BasisIndex::Permutation(p), max_len))
            .collect(),
    }
}

fn describe(e: &crate::Error) -> String {
    e.to_string()
}

/// Every combinatorial rule against the solver.
pub fn expansion_sweep(max_entry: u32, max_len: usize) -> SweepReport {
    let jobs: Vec<(BasisId, BasisId, BasisIndex, usize)> = rule_pairs()
        .iter()
        .flat_map(|&(s, t)| {
            sweep_indices(s, max_entry, max_len)
                .into_iter()
                .map(move |(i, n)| (s, t, i, n))
        })
        .collect();
    let outcomes = jobs
        .par_iter()
        .map(|(s, t, i, n)| match verify_expansion(*s, i, *t, *n) {
            Ok(r) if r.is_match() => Ok(()),
            Ok(r) => Err(format!(
                "{s}{i} -> {t} n={n}: rule {} vs solver {}",
                r.rule.terms(),
                r.solver.map_or_else(|| r.solver_error.unwrap_or_default(), |e| e.terms().to_string())
            )),
            Err(e) => Err(format!("{s}{i} -> {t} n={n}: {}", describe(&e))),
        })
        .collect();
    SweepReport::collect("expansion-rules", outcomes)
}

/// All rule paths from `source`, keyed by their final target.
fn rule_paths(source: BasisId) -> BTreeMap<BasisId, Vec<Vec<BasisId>>> {
    let mut out: BTreeMap<BasisId, Vec<Vec<BasisId>>> = BTreeMap::new();
    let mut stack = vec![vec![source]];
    while let Some(path) = stack.pop() {
        let last = *path.last().expect("paths are nonempty");
        for &(s, t) in rule_pairs() {
            if s == last {
                let mut next = path.clone();
                next.push(t);
                out.entry(t).or_default().push(next.clone());
                stack.push(next);
            }
        }
    }
    out
}

fn follow(path: &[BasisId], index: &BasisIndex, n: usize) -> Result<BasisExpansion> {
    let mut e = combinatorial_expansion(path[0], index, path[1], n)?;
    for &t in &path[2..] {
        e = compose_expansion(&e, t)?;
    }
    Ok(e)
}

/// Composite rule paths between the same pair of bases agree with each
/// other, and with the solver.
pub fn composition_sweep(max_entry: u32, max_len: usize) -> SweepReport {
    let mut jobs = Vec::new();
    for source in BasisId::ALL {
        for (target, paths) in rule_paths(source) {
            if paths.len() < 2 && paths.iter().all(|p| p.len() == 2) {
                continue;
            }
            for (index, n) in sweep_indices(source, max_entry, max_len) {
                jobs.push((source, target, paths.clone(), index, n));
            }
        }
    }
    let outcomes = jobs
        .par_iter()
        .map(|(source, target, paths, index, n)| {
            let f = basis_polynomial(*source, index, *n).map_err(|e| describe(&e))?;
            let solver = expand_via_solver(&f, *target).map_err(|e| describe(&e))?;
            for path in paths {
                let e = follow(path, index, *n).map_err(|e| describe(&e))?;
                if e.terms() != solver.terms() {
                    let names: Vec<&str> = path.iter().map(|b| b.name()).collect();
                    return Err(format!(
                        "{source}{index} n={n} via {}: {} vs solver {}",
                        names.join("->"),
                        e.terms(),
                        solver.terms()
                    ));
                }
            }
            Ok(())
        })
        .collect();
    SweepReport::collect("composed-rules", outcomes)
}

/// The solver returns the unit vector on every basis element of degree at
/// most `max_degree` in up to `max_n` variables.
pub fn round_trip_sweep(max_degree: u32, max_n: usize) -> SweepReport {
    let jobs: Vec<(BasisId, BasisIndex, usize)> = BasisId::ALL
        .into_iter()
        .flat_map(|b| {
            (1..=max_n).flat_map(move |n| {
                (0..=max_degree).flat_map(move |d| {
                    indices_of_degree(b, d, n).into_iter().map(move |i| (b, i, n))
                })
            })
        })
        .collect();
    let outcomes = jobs
        .par_iter()
        .map(|(b, i, n)| match round_trip(*b, i, *n) {
            Ok(true) => Ok(()),
            Ok(false) => Err(format!("{b}{i} n={n}: not a unit vector")),
            Err(e) => Err(format!("{b}{i} n={n}: {}", describe(&e))),
        })
        .collect();
    SweepReport::collect("solver-round-trip", outcomes)
}

/// Schubert polynomials expand nonnegatively in keys for all of `S_n`.
pub fn schubert_key_sweep(n: usize) -> SweepReport {
    let outcomes = Permutation::all(n)
        .par_iter()
        .map(|p| {
            let f = basis_polynomial(BasisId::Schubert, &BasisIndex::Permutation(p.clone()), n)
                .map_err(|e| describe(&e))?;
            let e = expand_via_solver(&f, BasisId::Key).map_err(|e| describe(&e))?;
            if e.is_nonnegative() {
                Ok(())
            } else {
                Err(format!("schubert {p} -> key: {}", e.terms()))
            }
        })
        .collect();
    SweepReport::collect("schubert-key-positivity", outcomes)
}

/// The four Schubert constructions agree on `S_n`.
pub fn schubert_agreement_sweep(n: usize) -> SweepReport {
    let outcomes = Permutation::all(n)
        .par_iter()
        .map(|p| match schubert_alternatives(p, n) {
            Ok(alt) if alt.agree() => Ok(()),
            Ok(_) => Err(format!("schubert {p}: constructions disagree")),
            Err(e) => Err(format!("schubert {p}: {}", describe(&e))),
        })
        .collect();
    SweepReport::collect("schubert-agreement", outcomes)
}

/// The three key constructions agree on entries at most `max_entry`,
/// length at most `max_len`.
pub fn key_agreement_sweep(max_entry: u32, max_len: usize) -> SweepReport {
    let jobs = sweep_indices(BasisId::Key, max_entry, max_len);
    let outcomes = jobs
        .par_iter()
        .map(|(i, n)| {
            let a = i.as_weak().expect("key indices are weak compositions");
            match key_alternatives(a, *n) {
                Ok(alt) if alt.agree() => Ok(()),
                Ok(_) => Err(format!("key {a}: constructions disagree")),
                Err(e) => Err(format!("key {a}: {}", describe(&e))),
            }
        })
        .collect();
    SweepReport::collect("key-agreement", outcomes)
}

/// The four Schur constructions agree for `|λ| ≤ max_size`, `ℓ(λ) ≤ n ≤
/// max_n`.
pub fn schur_agreement_sweep(max_size: u32, max_n: usize) -> SweepReport {
    let jobs: Vec<(Partition, usize)> = (0..=max_size)
        .flat_map(partitions)
        .flat_map(|l| (l.len().max(1)..=max_n).map(move |n| (l.clone(), n)))
        .collect();
    let outcomes = jobs
        .par_iter()
        .map(|(l, n)| match schur_alternatives(l, *n) {
            Ok(alt) if alt.agree() => Ok(()),
            Ok(_) => Err(format!("schur {l} n={n}: constructions disagree")),
            Err(e) => Err(format!("schur {l} n={n}: {}", describe(&e))),
        })
        .collect();
    SweepReport::collect("schur-agreement", outcomes)
}

/// Bases whose structure constants are expected to be nonnegative.
pub const POSITIVE_BASES: [BasisId; 10] = [
    BasisId::Monomial,
    BasisId::MonomialSymmetric,
    BasisId::Elementary,
    BasisId::Homogeneous,
    BasisId::Schur,
    BasisId::MonomialQuasisymmetric,
    BasisId::FundamentalQuasisymmetric,
    BasisId::FundamentalSlide,
    BasisId::MonomialSlide,
    BasisId::Schubert,
];

/// Unordered pairs of nonconstant indices of `basis`, each with the number
/// of variables its product is computed in.
///
/// Partitions and strong compositions have size at most `max_size` and use
/// `n = |a| + |b|`. Weak compositions have equal length `ℓ ≤ max_len`,
/// degree at most `max_size`, and use `n = ℓ`. Permutations range over
/// `S_{max_len}` with `ℓ(u) + ℓ(v) ≤ 2·max_size` and use `n = max_len`.
pub fn product_pairs(
    basis: BasisId,
    max_size: u32,
    max_len: usize,
) -> Vec<(BasisIndex, BasisIndex, usize)> {
    fn pairs<T: Clone>(items: &[T]) -> Vec<(T, T)> {
        items
            .iter()
            .enumerate()
            .flat_map(|(i, a)| items[i..].iter().map(move |b| (a.clone(), b.clone())))
            .collect()
    }
    match basis.species() {
        Species::Partition | Species::StrongComposition => {
            let indices: Vec<BasisIndex> = (1..=max_size)
                .flat_map(|d| indices_of_degree(basis, d, max_size as usize))
                .collect();
            pairs(&indices)
                .into_iter()
                .map(|(a, b)| {
                    let n = (a.degree() + b.degree()) as usize;
                    (a, b, n)
                })
                .collect()
        }
        Species::WeakComposition => (1..=max_len)
            .flat_map(|len| {
                let indices: Vec<BasisIndex> = (1..=max_size)
                    .flat_map(|d| weak_compositions(d, len))
                    .map(BasisIndex::Weak)
                    .collect();
                pairs(&indices).into_iter().map(move |(a, b)| (a, b, len))
            })
            .collect(),
        Species::Permutation => {
            let perms: Vec<Permutation> = Permutation::all(max_len)
                .into_iter()
                .filter(|p| !p.is_identity())
                .collect();
            pairs(&perms)
                .into_iter()
                .filter(|(u, v)| u.length() + v.length() <= 2 * max_size as usize)
                .map(|(u, v)| (BasisIndex::Permutation(u), BasisIndex::Permutation(v), max_len))
                .collect()
        }
    }
}

/// Each product rule against solver structure constants on
/// [`product_pairs`] of its basis.
pub fn product_rule_sweep(max_size: u32, max_len: usize) -> SweepReport {
    let jobs: Vec<(ProductRule, BasisIndex, BasisIndex, usize)> = ProductRule::ALL
        .into_iter()
        .flat_map(|r| {
            product_pairs(r.basis(), max_size, max_len)
                .into_iter()
                .map(move |(a, b, n)| (r, a, b, n))
        })
        .collect();
    let outcomes = jobs
        .par_iter()
        .map(|(rule, a, b, n)| {
            let got = combinatorial_product(*rule, a, b, *n).map_err(|e| describe(&e))?;
            let want = structure_constants(rule.basis(), a, b, *n).map_err(|e| describe(&e))?;
            if got == want {
                Ok(())
            } else {
                Err(format!("{rule} {a} {b} n={n}: {} vs solver {}", got.terms(), want.terms()))
            }
        })
        .collect();
    SweepReport::collect("product-rules", outcomes)
}

/// Structure constants of every basis in [`POSITIVE_BASES`] are
/// nonnegative on [`product_pairs`].
pub fn positivity_sweep(max_size: u32, max_len: usize) -> SweepReport {
    let jobs: Vec<(BasisId, BasisIndex, BasisIndex, usize)> = POSITIVE_BASES
        .into_iter()
        .flat_map(|basis| {
            product_pairs(basis, max_size, max_len)
                .into_iter()
                .map(move |(a, b, n)| (basis, a, b, n))
        })
        .collect();
    let outcomes = jobs
        .par_iter()
        .map(|(basis, a, b, n)| {
            let e = structure_constants(*basis, a, b, *n).map_err(|e| describe(&e))?;
            if e.is_nonnegative() {
                Ok(())
            } else {
                Err(format!("{basis} {a} {b} n={n}: {}", e.terms()))
            }
        })
        .collect();
    SweepReport::collect("structure-positivity", outcomes)
}

/// A negative structure constant `c_{ab}^c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NegativeWitness {
    pub basis: BasisId,
    pub a: BasisIndex,
    pub b: BasisIndex,
    pub n: usize,
    pub c: BasisIndex,
    pub coefficient: String,
}

impl fmt::Display for NegativeWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} * {} n={}: coefficient of {} is {}",
            self.basis, self.a, self.b, self.n, self.c, self.coefficient
        )
    }
}

/// The first negative structure constant of `basis` on [`product_pairs`],
/// scanning pairs in order.
pub fn find_negative_structure_constant(
    basis: BasisId,
    max_size: u32,
    max_len: usize,
) -> Result<Option<NegativeWitness>> {
    let jobs = product_pairs(basis, max_size, max_len);
    let found: Vec<Option<NegativeWitness>> = jobs
        .par_iter()
        .map(|(a, b, n)| {
            let e = structure_constants(basis, a, b, *n)?;
            let witness = e
                .terms()
                .iter()
                .find(|(_, k)| k.sign() == num_bigint::Sign::Minus)
                .map(|(c, k)| NegativeWitness {
                    basis,
                    a: a.clone(),
                    b: b.clone(),
                    n: *n,
                    c: c.clone(),
                    coefficient: k.to_string(),
                });
            Ok(witness)
        })
        .collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().next())
}

/// Records a negative quasiSchur structure constant on pairs with
/// `|α|, |β| ≤ max_size`; fails if there is none.
pub fn quasischur_negativity_sweep(max_size: u32) -> SweepReport {
    let mut r = SweepReport::new("quasischur-negativity");
    r.checked = product_pairs(BasisId::QuasiSchur, max_size, 0).len();
    match find_negative_structure_constant(BasisId::QuasiSchur, max_size, 0) {
        Ok(Some(w)) => r.notes.push(format!("witness {w}")),
        Ok(None) => r.failures.push("no negative structure constant found".to_string()),
        Err(e) => r.failures.push(describe(&e)),
    }
    r
}

/// Named groups of sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Expansions,
    Composed,
    RoundTrip,
    Agreement,
    SchubertKey,
    Products,
    Positivity,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::All,
        Suite::Expansions,
        Suite::Composed,
        Suite::RoundTrip,
        Suite::Agreement,
        Suite::SchubertKey,
        Suite::Products,
        Suite::Positivity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Expansions => "expansions",
            Suite::Composed => "composed",
            Suite::RoundTrip => "round-trip",
            Suite::Agreement => "agreement",
            Suite::SchubertKey => "schubert-key",
            Suite::Products => "products",
            Suite::Positivity => "positivity",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Unknown {
                what: "suite",
                name: s.to_string(),
            })
    }
}

/// Runs `suite` with the given bounds, in a fixed order.
///
/// `max_entry` and `max_len` bound indices as in [`sweep_indices`]. The
/// round-trip sweep uses `max_entry` as its degree bound; product and
/// positivity sweeps use it as the size bound of [`product_pairs`]; the
/// Schubert and Schur agreement sweeps run on `S_{max_len+1}` and
/// `|λ| ≤ max_len + 1`.
pub fn run_suite(suite: Suite, max_entry: u32, max_len: usize) -> Vec<SweepReport> {
    let mut out = Vec::new();
    let wants = |s: Suite| suite == Suite::All || suite == s;
    if wants(Suite::Expansions) {
        out.push(expansion_sweep(max_entry, max_len));
    }
    if wants(Suite::Composed) {
        out.push(composition_sweep(max_entry, max_len));
    }
    if wants(Suite::RoundTrip) {
        out.push(round_trip_sweep(max_entry, max_len));
    }
    if wants(Suite::Agreement) {
        out.push(schubert_agreement_sweep(max_len + 1));
        out.push(key_agreement_sweep(max_entry, max_len));
        out.push(schur_agreement_sweep(max_len as u32 + 1, max_len));
    }
    if wants(Suite::SchubertKey) {
        out.push(schubert_key_sweep(max_len));
    }
    if wants(Suite::Products) {
        out.push(product_rule_sweep(max_entry, max_len));
    }
    if wants(Suite::Positivity) {
        out.push(positivity_sweep(max_entry, max_len));
        out.push(quasischur_negativity_sweep(max_entry));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        for r in [
            expansion_sweep(2, 3),
            composition_sweep(2, 3),
            round_trip_sweep(3, 3),
            schubert_key_sweep(3),
            schubert_agreement_sweep(4),
            key_agreement_sweep(2, 3),
            schur_agreement_sweep(3, 3),
        ] {
            assert!(r.is_ok(), "{r}");
            assert!(r.checked > 0);
        }
    }

    #[test]
    fn small_product_sweeps_pass() {
        for r in [product_rule_sweep(2, 2), positivity_sweep(2, 2)] {
            assert!(r.is_ok(), "{r}");
            assert!(r.checked > 0);
        }
    }

    #[test]
    fn quasischur_has_negative_constant() {
        let w = find_negative_structure_constant(BasisId::QuasiSchur, 3, 0).unwrap();
        assert!(w.is_some());
    }

    #[test]
    fn sweep_index_counts() {
        assert_eq!(sweep_indices(BasisId::Key, 3, 2).len(), 4 + 16);
        assert_eq!(sweep_indices(BasisId::QuasiSchur, 2, 2).len(), 2 + 4);
        assert_eq!(sweep_indices(BasisId::Schubert, 0, 3).len(), 6);
    }
}
