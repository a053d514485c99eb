//! Change of basis: a generic unitriangular solver, the combinatorial
//! expansion rules between bases, and reports comparing the two.

mod report;
mod rules;

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::bases::{basis_polynomial, BasisId, BasisIndex};
use crate::combinat::{code_to_permutation, FormalSum, WeakComposition};
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;

pub use report::{
    expand_element, positivity_report, stable_limit_probe, verify_expansion, Expansion,
    ExpansionReport, Family,
    PositivityReport, StableLimitReport, StableStep,
};
pub use rules::{combinatorial_expansion, compose_expansion, rule_pairs};

/// Which end of the term order the solver peels from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Direction {
    #[default]
    Min,
    Max,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Min => "min",
            Direction::Max => "max",
        })
    }
}

impl std::str::FromStr for Direction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(Direction::Min),
            "max" => Ok(Direction::Max),
            _ => Err(Error::Unknown {
                what: "direction",
                name: s.to_string(),
            }),
        }
    }
}

/// An integer combination of elements of one basis in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisExpansion {
    basis: BasisId,
    n: usize,
    terms: FormalSum<BasisIndex>,
}

impl BasisExpansion {
    pub fn new(basis: BasisId, n: usize, terms: FormalSum<BasisIndex>) -> Self {
        BasisExpansion { basis, n, terms }
    }

    pub fn basis(&self) -> BasisId {
        self.basis
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &FormalSum<BasisIndex> {
        &self.terms
    }

    pub fn coefficient(&self, index: &BasisIndex) -> BigInt {
        self.terms.coefficient(index)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.is_nonnegative()
    }

    /// Sums the basis elements back into a polynomial.
    pub fn to_polynomial(&self) -> Result<Polynomial> {
        let mut out = Polynomial::zero(self.n);
        for (index, c) in self.terms.iter() {
            let b = basis_polynomial(self.basis, index, self.n)?;
            out = &out + &b.scaled(c);
        }
        Ok(out)
    }
}

/// One line per term, `basis index coefficient`.
impl fmt::Display for BasisExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (index, c) in self.terms.iter() {
            writeln!(f, "{} {} {}", self.basis, index, c)?;
        }
        Ok(())
    }
}

/// Expands `f` in `target` using the default direction.
pub fn expand_via_solver(f: &Polynomial, target: BasisId) -> Result<BasisExpansion> {
    expand_via_solver_with(f, target, Direction::default())
}

/// Expands `f` in `target` by repeatedly cancelling the extreme remaining
/// monomial against the basis element it indexes.
pub fn expand_via_solver_with(
    f: &Polynomial,
    target: BasisId,
    direction: Direction,
) -> Result<BasisExpansion> {
    if target == BasisId::Homogeneous {
        return expand_homogeneous(f, direction);
    }
    let n = f.nvars();
    let mut terms = FormalSum::new();
    for component in f.homogeneous_components().into_values() {
        let mut rem = component;
        while let Some((a, c)) = extreme(&rem, direction) {
            let index = index_for(target, &a, direction)?;
            let b = basis_polynomial(target, &index, n)?;
            match extreme(&b, direction) {
                Some((lead, one)) if lead == a && one.is_one() => {}
                _ => {
                    return Err(Error::TriangularityViolation {
                        basis: target.name(),
                        index: index.to_string(),
                        monomial: a.to_string(),
                    })
                }
            }
            rem = &rem - &b.scaled(&c);
            terms.add_term(index, c);
        }
    }
    Ok(BasisExpansion::new(target, n, terms))
}

fn extreme(f: &Polynomial, direction: Direction) -> Option<(WeakComposition, BigInt)> {
    let t = match direction {
        Direction::Min => f.min_term(),
        Direction::Max => f.max_term(),
    };
    t.map(|(a, c)| (a.clone(), c.clone()))
}

/// The index whose basis element has `x^a` as its extreme term.
fn index_for(target: BasisId, a: &WeakComposition, direction: Direction) -> Result<BasisIndex> {
    let stuck = || Error::NotInSpan {
        basis: target.name(),
        monomial: a.to_string(),
    };
    let sorted_ok = match direction {
        Direction::Min => a.is_weakly_increasing(),
        Direction::Max => a.is_weakly_decreasing(),
    };
    let justified = {
        let e = a.entries();
        let k = e.iter().position(|&x| x > 0).unwrap_or(e.len());
        let j = e.iter().rposition(|&x| x > 0).map_or(0, |j| j + 1);
        match direction {
            Direction::Min => e[k..].iter().all(|&x| x > 0),
            Direction::Max => e[..j].iter().all(|&x| x > 0),
        }
    };
    match target {
        BasisId::MonomialSymmetric | BasisId::Schur | BasisId::Homogeneous => {
            if !sorted_ok {
                return Err(stuck());
            }
            Ok(BasisIndex::Partition(a.sorted_partition()))
        }
        BasisId::Elementary => {
            if !sorted_ok {
                return Err(stuck());
            }
            Ok(BasisIndex::Partition(a.sorted_partition().conjugate()))
        }
        BasisId::MonomialQuasisymmetric
        | BasisId::FundamentalQuasisymmetric
        | BasisId::QuasiSchur => {
            if !justified {
                return Err(stuck());
            }
            Ok(BasisIndex::Strong(a.positive_part()))
        }
        BasisId::Schubert => Ok(BasisIndex::Permutation(code_to_permutation(a))),
        _ => Ok(BasisIndex::Weak(a.clone())),
    }
}

/// Expands in Schur first, then converts to `h` by peeling the
/// lexicographically least partition, whose Schur coefficient equals its
/// `h` coefficient.
fn expand_homogeneous(f: &Polynomial, direction: Direction) -> Result<BasisExpansion> {
    let n = f.nvars();
    let mut rem = expand_via_solver_with(f, BasisId::Schur, direction)?;
    let mut terms = FormalSum::new();
    loop {
        let Some((index, c)) = rem.terms.iter().next().map(|(i, c)| (i.clone(), c.clone())) else {
            break;
        };
        let h = basis_polynomial(BasisId::Homogeneous, &index, n)?;
        let in_schur = expand_via_solver_with(&h, BasisId::Schur, direction)?;
        if !in_schur.coefficient(&index).is_one()
            || in_schur.terms.iter().next().map(|(i, _)| i) != Some(&index)
        {
            return Err(Error::TriangularityViolation {
                basis: BasisId::Homogeneous.name(),
                index: index.to_string(),
                monomial: index.to_string(),
            });
        }
        rem.terms = &rem.terms - &in_schur.terms.scaled(&c);
        terms.add_term(index, c);
    }
    Ok(BasisExpansion::new(BasisId::Homogeneous, n, terms))
}

/// Expands `basis[index]` in its own basis; the result is the unit vector
/// exactly when the basis is unitriangular at `index`.
pub fn round_trip(basis: BasisId, index: &BasisIndex, n: usize) -> Result<bool> {
    let b = basis_polynomial(basis, index, n)?;
    if b.is_zero() {
        return Ok(true);
    }
    let e = expand_via_solver(&b, basis)?;
    Ok(e.terms == FormalSum::singleton(index.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::indices_of_degree;

    fn idx(basis: BasisId, s: &str) -> BasisIndex {
        BasisIndex::parse(basis, s).unwrap()
    }

    #[test]
    fn round_trip_all_bases_small() {
        for basis in BasisId::ALL {
            for n in 1..=3 {
                for d in 0..=3 {
                    for index in indices_of_degree(basis, d, n) {
                        assert!(round_trip(basis, &index, n).unwrap(), "{basis}{index} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn schur_square() {
        let s21 = basis_polynomial(BasisId::Schur, &idx(BasisId::Schur, "(2,1)"), 6).unwrap();
        let e = expand_via_solver(&(&*s21 * &*s21), BasisId::Schur).unwrap();
        assert_eq!(e.coefficient(&idx(BasisId::Schur, "(3,2,1)")), BigInt::from(2));
        assert!(e.is_nonnegative());
    }

    #[test]
    fn not_quasisymmetric() {
        let f = Polynomial::monomial(WeakComposition::new(vec![1, 0]));
        assert!(matches!(
            expand_via_solver(&f, BasisId::FundamentalQuasisymmetric),
            Err(Error::NotInSpan { .. })
        ));
        assert!(matches!(
            expand_via_solver(&f, BasisId::Schur),
            Err(Error::NotInSpan { .. })
        ));
    }

    #[test]
    fn max_direction_for_sym() {
        let s = basis_polynomial(BasisId::Schur, &idx(BasisId::Schur, "(2,1)"), 3).unwrap();
        let m = expand_via_solver_with(&s, BasisId::MonomialSymmetric, Direction::Max).unwrap();
        assert_eq!(m.to_string(), "m (1,1,1) 2\nm (2,1) 1\n");
        let q = basis_polynomial(BasisId::QuasiSchur, &idx(BasisId::QuasiSchur, "(1,3)"), 3).unwrap();
        assert!(matches!(
            expand_via_solver_with(&q, BasisId::QuasiSchur, Direction::Max),
            Err(Error::TriangularityViolation { .. })
        ));
    }

    #[test]
    fn homogeneous_in_h() {
        let h = basis_polynomial(BasisId::Homogeneous, &idx(BasisId::Homogeneous, "(2,1)"), 3).unwrap();
        let e = basis_polynomial(BasisId::Elementary, &idx(BasisId::Elementary, "(2,1)"), 3).unwrap();
        let prod = &*h * &*e;
        let back = expand_via_solver(&prod, BasisId::Homogeneous).unwrap();
        assert_eq!(back.to_polynomial().unwrap(), prod);
    }
}
