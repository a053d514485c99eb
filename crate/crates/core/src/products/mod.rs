//! Combinatorial multiplication rules and structure constants.

mod lr;
mod shuffle;
mod slide;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use crate::bases::{basis_polynomial, BasisId, BasisIndex};
use crate::combinat::enumerate::bounded_weak_compositions;
use crate::combinat::{FormalSum, WeakComposition};
use crate::error::{Error, Result};
use crate::expand::{expand_via_solver, BasisExpansion};

pub use lr::{lr_coefficient, lr_product};
pub use shuffle::{overlapping_shuffle_product, shuffle_product, shuffles, ShuffleWord};
pub use slide::{overlapping_slide_product, slide_product};

/// `basis[a] · basis[b]` expanded in `basis` by the solver, in `n`
/// variables.
pub fn structure_constants(
    basis: BasisId,
    a: &BasisIndex,
    b: &BasisIndex,
    n: usize,
) -> Result<BasisExpansion> {
    let fa = basis_polynomial(basis, a, n)?;
    let fb = basis_polynomial(basis, b, n)?;
    expand_via_solver(&(&*fa * &*fb), basis)
}

/// The five combinatorial product rules, each tied to the basis whose
/// structure constants it computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductRule {
    Shuffle,
    OverlappingShuffle,
    Slide,
    OverlappingSlide,
    LittlewoodRichardson,
}

impl ProductRule {
    pub const ALL: [ProductRule; 5] = [
        ProductRule::Shuffle,
        ProductRule::OverlappingShuffle,
        ProductRule::Slide,
        ProductRule::OverlappingSlide,
        ProductRule::LittlewoodRichardson,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProductRule::Shuffle => "shuffle",
            ProductRule::OverlappingShuffle => "oshuffle",
            ProductRule::Slide => "slide",
            ProductRule::OverlappingSlide => "oslide",
            ProductRule::LittlewoodRichardson => "lr",
        }
    }

    pub fn basis(self) -> BasisId {
        match self {
            ProductRule::Shuffle => BasisId::FundamentalQuasisymmetric,
            ProductRule::OverlappingShuffle => BasisId::MonomialQuasisymmetric,
            ProductRule::Slide => BasisId::FundamentalSlide,
            ProductRule::OverlappingSlide => BasisId::MonomialSlide,
            ProductRule::LittlewoodRichardson => BasisId::Schur,
        }
    }

    /// The rule computing structure constants of `basis`, if any.
    pub fn for_basis(basis: BasisId) -> Option<ProductRule> {
        ProductRule::ALL.into_iter().find(|r| r.basis() == basis)
    }
}

impl fmt::Display for ProductRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for ProductRule {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for ProductRule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ProductRule::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Unknown {
                what: "product rule",
                name: s.to_string(),
            })
    }
}

/// Applies `rule` to `a` and `b` and keeps the terms whose basis element
/// survives in `n` variables. Weak compositions are padded to length `n`.
pub fn combinatorial_product(
    rule: ProductRule,
    a: &BasisIndex,
    b: &BasisIndex,
    n: usize,
) -> Result<BasisExpansion> {
    let basis = rule.basis();
    for index in [a, b] {
        if index.species() != basis.species() {
            return Err(Error::SpeciesMismatch {
                basis: basis.name(),
                expected: basis.species().name(),
                got: index.to_string(),
            });
        }
    }
    let terms: FormalSum<BasisIndex> = match (a, b) {
        (BasisIndex::Strong(x), BasisIndex::Strong(y)) => {
            let sum = if rule == ProductRule::Shuffle {
                shuffle_product(x, y)
            } else {
                overlapping_shuffle_product(x, y)
            };
            sum.iter()
                .filter(|(g, _)| g.len() <= n)
                .map(|(g, c)| (BasisIndex::Strong(g.clone()), c.clone()))
                .collect()
        }
        (BasisIndex::Weak(x), BasisIndex::Weak(y)) => {
            let (x, y) = (fit(x, n)?, fit(y, n)?);
            let sum = if rule == ProductRule::Slide {
                slide_product(&x, &y)?
            } else {
                overlapping_slide_product(&x, &y)?
            };
            sum.map_indices(|c| BasisIndex::Weak(c.clone()))
        }
        (BasisIndex::Partition(x), BasisIndex::Partition(y)) => lr_product(x, y)
            .iter()
            .filter(|(nu, _)| nu.len() <= n)
            .map(|(nu, c)| (BasisIndex::Partition(nu.clone()), c.clone()))
            .collect(),
        _ => unreachable!("species checked above"),
    };
    Ok(BasisExpansion::new(basis, n, terms))
}

fn fit(a: &WeakComposition, n: usize) -> Result<WeakComposition> {
    if a.trimmed().len() > n {
        return Err(Error::NTooSmall {
            index: a.to_string(),
            n,
        });
    }
    Ok(a.trimmed().padded(n))
}

/// Number of variables a product is computed in when none is given:
/// `|a| + |b|` for partitions and strong compositions, otherwise the larger
/// index length or permutation size.
pub fn default_product_n(a: &BasisIndex, b: &BasisIndex) -> usize {
    match (a, b) {
        (BasisIndex::Weak(x), BasisIndex::Weak(y)) => x.len().max(y.len()),
        (BasisIndex::Permutation(x), BasisIndex::Permutation(y)) => x.size().max(y.size()),
        _ => (a.degree() + b.degree()).max(1) as usize,
    }
}

/// Solver structure constants, with the combinatorial rule alongside when
/// the basis has one.
#[derive(Clone, Debug, Serialize)]
pub struct ProductReport {
    pub basis: BasisId,
    pub a: BasisIndex,
    pub b: BasisIndex,
    pub n: usize,
    pub rule: Option<ProductRule>,
    pub rule_terms: Option<BasisExpansion>,
    pub solver: BasisExpansion,
}

impl ProductReport {
    pub fn is_match(&self) -> bool {
        self.rule_terms.as_ref().is_none_or(|r| r.terms() == self.solver.terms())
    }

    pub fn mismatches(&self) -> usize {
        self.rule_terms
            .as_ref()
            .map_or(0, |r| (r.terms() - self.solver.terms()).len())
    }
}

/// The solver's terms, then `OK` or `MISMATCH k entries` when a rule was
/// compared.
impl fmt::Display for ProductReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.solver)?;
        match &self.rule_terms {
            None => Ok(()),
            Some(_) if self.is_match() => writeln!(f, "OK"),
            Some(_) => writeln!(f, "MISMATCH {} entries", self.mismatches()),
        }
    }
}

/// `basis[a] · basis[b]` in `n` variables (default [`default_product_n`]).
pub fn multiply(
    basis: BasisId,
    a: &BasisIndex,
    b: &BasisIndex,
    n: Option<usize>,
) -> Result<ProductReport> {
    let n = n.unwrap_or_else(|| default_product_n(a, b));
    let solver = structure_constants(basis, a, b, n)?;
    let rule = ProductRule::for_basis(basis);
    let rule_terms = rule.map(|r| combinatorial_product(r, a, b, n)).transpose()?;
    Ok(ProductReport {
        basis,
        a: a.clone(),
        b: b.clone(),
        n,
        rule,
        rule_terms,
        solver,
    })
}

/// Structure constants `(a, b) ↦ basis[a]·basis[b]` over a set of index
/// pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StructureTable {
    pub entries: BTreeMap<(BasisIndex, BasisIndex, BasisIndex), BigInt>,
}

impl StructureTable {
    /// Computes the constants for every unordered pair from `indices`.
    pub fn build(basis: BasisId, indices: &[BasisIndex], n: usize) -> Result<Self> {
        let pairs: Vec<(&BasisIndex, &BasisIndex)> = indices
            .iter()
            .enumerate()
            .flat_map(|(i, a)| indices[i..].iter().map(move |b| (a, b)))
            .collect();
        let expansions: Vec<(&BasisIndex, &BasisIndex, BasisExpansion)> = pairs
            .par_iter()
            .map(|&(a, b)| structure_constants(basis, a, b, n).map(|e| (a, b, e)))
            .collect::<Result<_>>()?;
        let mut entries = BTreeMap::new();
        for (a, b, e) in expansions {
            for (c, k) in e.terms().iter() {
                entries.insert((a.clone(), b.clone(), c.clone()), k.clone());
                entries.insert((b.clone(), a.clone(), c.clone()), k.clone());
            }
        }
        Ok(StructureTable { entries })
    }

    pub fn get(&self, a: &BasisIndex, b: &BasisIndex, c: &BasisIndex) -> BigInt {
        self.entries
            .get(&(a.clone(), b.clone(), c.clone()))
            .cloned()
            .unwrap_or_default()
    }

    /// The first negative entry, if any.
    pub fn negative_entry(&self) -> Option<(&(BasisIndex, BasisIndex, BasisIndex), &BigInt)> {
        self.entries.iter().find(|(_, v)| v.is_negative())
    }
}

/// A negative coefficient in an atom expansion of a product of keys.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureCounterexample {
    pub a: WeakComposition,
    pub b: WeakComposition,
    pub atom: BasisIndex,
    pub coefficient: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub max_entry: u32,
    pub max_len: usize,
    pub checked_pairs: usize,
    pub max_coefficient: String,
    pub negatives: Vec<ConjectureCounterexample>,
}

impl ConjectureReport {
    pub fn holds(&self) -> bool {
        self.negatives.is_empty()
    }
}

impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "checked pairs: {}", self.checked_pairs)?;
        writeln!(f, "max coefficient: {}", self.max_coefficient)?;
        for w in &self.negatives {
            writeln!(f, "NEGATIVE key{}*key{} atom{} {}", w.a, w.b, w.atom, w.coefficient)?;
        }
        writeln!(
            f,
            "{}",
            if self.holds() {
                "OK".to_string()
            } else {
                format!("MISMATCH {} entries", self.negatives.len())
            }
        )
    }
}

/// Expands `𝔇_a · 𝔇_b` in Demazure atoms for all unordered pairs of weak
/// compositions of equal length `ℓ ≤ max_len` with entries at most
/// `max_entry`, in `ℓ` variables, and collects negative coefficients.
pub fn conjecture_harness_reiner_shimozono(max_entry: u32, max_len: usize) -> Result<ConjectureReport> {
    let mut jobs = Vec::new();
    for len in 1..=max_len {
        let comps = bounded_weak_compositions(max_entry, len);
        for (i, a) in comps.iter().enumerate() {
            for b in &comps[i..] {
                jobs.push((a.clone(), b.clone(), len));
            }
        }
    }
    let results: Vec<(WeakComposition, WeakComposition, BasisExpansion)> = jobs
        .par_iter()
        .map(|(a, b, n)| {
            let fa = basis_polynomial(BasisId::Key, &BasisIndex::Weak(a.clone()), *n)?;
            let fb = basis_polynomial(BasisId::Key, &BasisIndex::Weak(b.clone()), *n)?;
            let e = expand_via_solver(&(&*fa * &*fb), BasisId::Atom)?;
            Ok((a.clone(), b.clone(), e))
        })
        .collect::<Result<_>>()?;
    let mut report = ConjectureReport {
        max_entry,
        max_len,
        checked_pairs: results.len(),
        ..Default::default()
    };
    let mut max = BigInt::default();
    for (a, b, e) in results {
        for (c, k) in e.terms().iter() {
            if *k > max {
                max = k.clone();
            }
            if k.is_negative() {
                report.negatives.push(ConjectureCounterexample {
                    a: a.clone(),
                    b: b.clone(),
                    atom: c.clone(),
                    coefficient: k.to_string(),
                });
            }
        }
    }
    report.max_coefficient = max.to_string();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(basis: BasisId, s: &str) -> BasisIndex {
        BasisIndex::parse(basis, s).unwrap()
    }

    #[test]
    fn rule_names_round_trip() {
        for r in ProductRule::ALL {
            assert_eq!(r.name().parse::<ProductRule>().unwrap(), r);
            assert_eq!(ProductRule::for_basis(r.basis()), Some(r));
        }
    }

    #[test]
    fn monomial_quasisymmetric_example() {
        let basis = BasisId::MonomialQuasisymmetric;
        let (a, b) = (idx(basis, "(2)"), idx(basis, "(1,2)"));
        let rule = combinatorial_product(ProductRule::OverlappingShuffle, &a, &b, 5).unwrap();
        let solver = structure_constants(basis, &a, &b, 5).unwrap();
        assert_eq!(rule, solver);
    }

    #[test]
    fn multiply_defaults() {
        let basis = BasisId::MonomialQuasisymmetric;
        let r = multiply(basis, &idx(basis, "(2)"), &idx(basis, "(1,2)"), None).unwrap();
        assert_eq!(r.n, 5);
        assert!(r.is_match());
        assert_eq!(r.to_string().lines().count(), 5);
        let basis = BasisId::Key;
        let r = multiply(basis, &idx(basis, "(0,1,0)"), &idx(basis, "(1,0,1)"), None).unwrap();
        assert_eq!(r.rule, None);
        assert!(!r.solver.is_nonnegative());
    }

    #[test]
    fn lr_matches_solver() {
        let basis = BasisId::Schur;
        let (a, b) = (idx(basis, "(2,1)"), idx(basis, "(2,1)"));
        let rule = combinatorial_product(ProductRule::LittlewoodRichardson, &a, &b, 3).unwrap();
        assert_eq!(rule, structure_constants(basis, &a, &b, 3).unwrap());
    }

    fn check(rule: ProductRule, a: &str, b: &str, n: usize, expected: &[(&str, i64)]) {
        let basis = rule.basis();
        let (a, b) = (idx(basis, a), idx(basis, b));
        let want: FormalSum<BasisIndex> = expected
            .iter()
            .map(|(c, k)| (idx(basis, c), BigInt::from(*k)))
            .collect();
        let got = combinatorial_product(rule, &a, &b, n).unwrap();
        assert_eq!(got.terms(), &want, "{rule} {a} {b}");
        assert_eq!(structure_constants(basis, &a, &b, n).unwrap(), got);
    }

    #[test]
    fn worked_overlapping_shuffle() {
        let terms = [("(2,1,2)", 1), ("(1,2,2)", 2), ("(3,2)", 1), ("(1,4)", 1)];
        check(ProductRule::OverlappingShuffle, "(2)", "(1,2)", 5, &terms);
    }

    #[test]
    fn worked_shuffle() {
        let terms = [
            ("(1,2,2)", 2),
            ("(1,1,2,1)", 1),
            ("(1,3,1)", 1),
            ("(2,2,1)", 1),
            ("(1,1,3)", 1),
            ("(2,1,2)", 1),
            ("(1,4)", 1),
            ("(2,3)", 1),
            ("(3,2)", 1),
        ];
        check(ProductRule::Shuffle, "(2)", "(1,2)", 5, &terms);
    }

    const SLIDE_TERMS: [(&str, i64); 7] = [
        ("(2,0,0,3)", 1),
        ("(1,1,0,3)", 1),
        ("(2,0,2,1)", 1),
        ("(1,1,2,1)", 1),
        ("(2,0,1,2)", 1),
        ("(1,1,1,2)", 1),
        ("(1,2,0,2)", 1),
    ];

    #[test]
    fn worked_slide() {
        check(ProductRule::Slide, "(0,1,0,2)", "(1,0,0,1)", 4, &SLIDE_TERMS);
    }

    #[test]
    fn worked_overlapping_slide() {
        check(ProductRule::OverlappingSlide, "(0,1,0,2)", "(1,0,0,1)", 4, &SLIDE_TERMS);
    }

    #[test]
    fn small_harness() {
        let r = conjecture_harness_reiner_shimozono(1, 2).unwrap();
        assert!(r.holds());
        assert_eq!(r.checked_pairs, 3 + 10);
    }
}
