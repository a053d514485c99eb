//! Comparisons between rule and solver, positivity checks, and the
//! stable-limit probe.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use super::{combinatorial_expansion, expand_via_solver, BasisExpansion};
use crate::bases::{basis_polynomial, quasi_schur, schur, BasisId, BasisIndex};
use crate::combinat::{FormalSum, WeakComposition};
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;

/// A combinatorial expansion side by side with the solver's.
#[derive(Clone, Debug, Serialize)]
pub struct ExpansionReport {
    pub source: BasisId,
    pub index: BasisIndex,
    pub rule: BasisExpansion,
    pub solver: Option<BasisExpansion>,
    /// Set when the solver could not expand the source element.
    pub solver_error: Option<String>,
    /// `rule − solver`.
    pub diff: FormalSum<BasisIndex>,
}

impl ExpansionReport {
    pub fn is_match(&self) -> bool {
        self.solver_error.is_none() && self.diff.is_empty()
    }

    pub fn mismatches(&self) -> usize {
        if self.solver_error.is_some() {
            self.diff.len().max(1)
        } else {
            self.diff.len()
        }
    }
}

/// The rule's terms, then `OK` or `MISMATCH k entries`.
impl fmt::Display for ExpansionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rule)?;
        if self.is_match() {
            writeln!(f, "OK")
        } else {
            writeln!(f, "MISMATCH {} entries", self.mismatches())
        }
    }
}

/// Runs the rule for `(source, target)` and the solver on
/// `source[index]`, and records any difference.
pub fn verify_expansion(
    source: BasisId,
    index: &BasisIndex,
    target: BasisId,
    n: usize,
) -> Result<ExpansionReport> {
    let rule = combinatorial_expansion(source, index, target, n)?;
    let f = basis_polynomial(source, index, n)?;
    let (solver, solver_error, diff) = match expand_via_solver(&f, target) {
        Ok(e) => {
            let diff = rule.terms() - e.terms();
            (Some(e), None, diff)
        }
        Err(err) => (None, Some(err.to_string()), rule.terms().clone()),
    };
    Ok(ExpansionReport {
        source,
        index: index.clone(),
        rule,
        solver,
        solver_error,
        diff,
    })
}

/// An expansion checked against its combinatorial rule, or produced by the
/// solver alone when no rule covers the pair.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "method", rename_all = "lowercase")]
pub enum Expansion {
    Checked(ExpansionReport),
    Solver(BasisExpansion),
}

impl Expansion {
    pub fn is_match(&self) -> bool {
        match self {
            Expansion::Checked(r) => r.is_match(),
            Expansion::Solver(_) => true,
        }
    }
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expansion::Checked(r) => write!(f, "{r}"),
            Expansion::Solver(e) => write!(f, "{e}"),
        }
    }
}

/// `source[index]` in `target`, through [`verify_expansion`] when a rule
/// exists for the pair.
pub fn expand_element(
    source: BasisId,
    index: &BasisIndex,
    target: BasisId,
    n: usize,
) -> Result<Expansion> {
    if super::rule_pairs().contains(&(source, target)) {
        return verify_expansion(source, index, target, n).map(Expansion::Checked);
    }
    let f = basis_polynomial(source, index, n)?;
    expand_via_solver(&f, target).map(Expansion::Solver)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityReport {
    pub basis: BasisId,
    /// Negative coefficients with their indices; empty when positive.
    pub witnesses: Vec<(BasisIndex, BigInt)>,
}

impl PositivityReport {
    pub fn is_positive(&self) -> bool {
        self.witnesses.is_empty()
    }
}

impl Serialize for PositivityReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Witness<'a> {
            index: &'a BasisIndex,
            coefficient: String,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            basis: BasisId,
            positive: bool,
            witnesses: Vec<Witness<'a>>,
        }
        Doc {
            basis: self.basis,
            positive: self.is_positive(),
            witnesses: self
                .witnesses
                .iter()
                .map(|(index, c)| Witness {
                    index,
                    coefficient: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

pub fn positivity_report(e: &BasisExpansion) -> PositivityReport {
    PositivityReport {
        basis: e.basis(),
        witnesses: e.terms().negative_terms(),
    }
}

/// A family whose members gain leading zeros in the index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Key,
    Quasikey,
}

impl Family {
    pub fn basis(self) -> BasisId {
        match self {
            Family::Key => BasisId::Key,
            Family::Quasikey => BasisId::Quasikey,
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "key" => Ok(Family::Key),
            "qkey" | "quasikey" => Ok(Family::Quasikey),
            _ => Err(Error::Unknown {
                what: "family",
                name: s.to_string(),
            }),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StableStep {
    pub m: usize,
    pub index: WeakComposition,
    /// The member with `m` leading zeros, restricted to the window.
    pub restricted: Polynomial,
    pub matches_previous: bool,
    pub matches_limit: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct StableLimitReport {
    pub family: Family,
    pub index: WeakComposition,
    pub window: usize,
    /// `s_{sort(a)}` or `S_{a⁺}` in the window variables.
    pub limit: Polynomial,
    pub steps: Vec<StableStep>,
}

impl StableLimitReport {
    /// The least `m` from which every later member agrees with the limit.
    pub fn stabilized_at(&self) -> Option<usize> {
        let tail = self.steps.iter().rev().take_while(|s| s.matches_limit).count();
        (tail > 0).then(|| self.steps[self.steps.len() - tail].m)
    }
}

impl fmt::Display for StableLimitReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            writeln!(
                f,
                "m={} {} terms={} previous={} limit={}",
                s.m,
                s.index,
                s.restricted.len(),
                s.matches_previous,
                s.matches_limit
            )?;
        }
        match self.stabilized_at() {
            Some(m) => writeln!(f, "STABLE from m={m}"),
            None => writeln!(f, "NOT STABLE"),
        }
    }
}

/// Tracks `family[0^m a]` restricted to the first `window` variables for
/// `m = 0..=m_max`, against the symmetric or quasisymmetric limit.
pub fn stable_limit_probe(
    family: Family,
    a: &WeakComposition,
    m_max: usize,
    window: usize,
) -> Result<StableLimitReport> {
    let limit = match family {
        Family::Key => schur(&a.sorted_partition(), window),
        Family::Quasikey => quasi_schur(&a.positive_part(), window),
    };
    let mut steps: Vec<StableStep> = Vec::new();
    for m in 0..=m_max {
        let index = a.prepend_zeros(m);
        let member = basis_polynomial(family.basis(), &BasisIndex::Weak(index.clone()), index.len())?;
        let restricted = member.restrict(window);
        steps.push(StableStep {
            m,
            index,
            matches_previous: steps.last().is_some_and(|p| p.restricted == restricted),
            matches_limit: restricted == limit,
            restricted,
        });
    }
    Ok(StableLimitReport {
        family,
        index: a.clone(),
        window,
        limit,
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[u32]) -> WeakComposition {
        WeakComposition::new(v.to_vec())
    }

    #[test]
    fn increasing_key_is_already_schur() {
        let r = stable_limit_probe(Family::Key, &w(&[0, 1, 2]), 2, 3).unwrap();
        assert_eq!(r.stabilized_at(), Some(0));
    }

    #[test]
    fn quasikey_of_strong_is_constant() {
        let r = stable_limit_probe(Family::Quasikey, &w(&[1, 3]), 3, 2).unwrap();
        assert!(r.steps.iter().all(|s| s.matches_limit));
        assert!(r.steps.iter().skip(1).all(|s| s.matches_previous));
    }

    #[test]
    fn zero_expansion_is_positive() {
        let e = BasisExpansion::new(BasisId::Schur, 3, FormalSum::new());
        assert!(positivity_report(&e).is_positive());
    }
}
