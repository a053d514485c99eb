//! Basis elements of the symmetric, quasisymmetric and asymmetric
//! polynomial rings, each built from its defining combinatorial formula.

mod alternatives;
mod asym;
mod qsym;
mod schubert;
mod sym;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use serde::Serialize;

use crate::combinat::enumerate::{
    partitions, partitions_max_len, strong_compositions, weak_compositions,
};
use crate::combinat::{
    code_to_permutation, Partition, Permutation, StrongComposition, WeakComposition,
};
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;

pub use alternatives::{
    key_alternatives, schubert_alternatives, schur_alternatives, KeyAlternatives,
    SchubertAlternatives, SchurAlternatives,
};
pub use asym::{
    atom, fundamental_slide, key_by_kohnert, key_by_operators, key_by_skylines, monomial_slide,
    particle, quasikey,
};
pub use qsym::{fundamental_quasisymmetric, monomial_quasisymmetric, quasi_schur};
pub use schubert::{
    schubert_by_bjs, schubert_by_divided_differences, schubert_by_kohnert,
    schubert_by_pipe_dreams, schur_permutation,
};
pub use sym::{elementary, homogeneous, monomial_symmetric, schur, schur_bialternant};

/// The kind of object indexing a basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Species {
    Partition,
    StrongComposition,
    WeakComposition,
    Permutation,
}

impl Species {
    pub fn name(self) -> &'static str {
        match self {
            Species::Partition => "partition",
            Species::StrongComposition => "strong composition",
            Species::WeakComposition => "weak composition",
            Species::Permutation => "permutation",
        }
    }
}

/// Which ring a basis lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum World {
    Symmetric,
    Quasisymmetric,
    Asymmetric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisId {
    /// Monomials `x^a`.
    Monomial,
    MonomialSymmetric,
    Elementary,
    Homogeneous,
    Schur,
    MonomialQuasisymmetric,
    FundamentalQuasisymmetric,
    QuasiSchur,
    FundamentalSlide,
    MonomialSlide,
    Particle,
    Atom,
    Quasikey,
    Key,
    Schubert,
}

impl BasisId {
    pub const ALL: [BasisId; 15] = [
        BasisId::Monomial,
        BasisId::MonomialSymmetric,
        BasisId::Elementary,
        BasisId::Homogeneous,
        BasisId::Schur,
        BasisId::MonomialQuasisymmetric,
        BasisId::FundamentalQuasisymmetric,
        BasisId::QuasiSchur,
        BasisId::FundamentalSlide,
        BasisId::MonomialSlide,
        BasisId::Particle,
        BasisId::Atom,
        BasisId::Quasikey,
        BasisId::Key,
        BasisId::Schubert,
    ];

    /// Short name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            BasisId::Monomial => "x",
            BasisId::MonomialSymmetric => "m",
            BasisId::Elementary => "e",
            BasisId::Homogeneous => "h",
            BasisId::Schur => "s",
            BasisId::MonomialQuasisymmetric => "M",
            BasisId::FundamentalQuasisymmetric => "F",
            BasisId::QuasiSchur => "qs",
            BasisId::FundamentalSlide => "fslide",
            BasisId::MonomialSlide => "mslide",
            BasisId::Particle => "particle",
            BasisId::Atom => "atom",
            BasisId::Quasikey => "qkey",
            BasisId::Key => "key",
            BasisId::Schubert => "schubert",
        }
    }

    pub fn species(self) -> Species {
        match self {
            BasisId::MonomialSymmetric
            | BasisId::Elementary
            | BasisId::Homogeneous
            | BasisId::Schur => Species::Partition,
            BasisId::MonomialQuasisymmetric
            | BasisId::FundamentalQuasisymmetric
            | BasisId::QuasiSchur => Species::StrongComposition,
            BasisId::Schubert => Species::Permutation,
            _ => Species::WeakComposition,
        }
    }

    pub fn world(self) -> World {
        match self.species() {
            Species::Partition => World::Symmetric,
            Species::StrongComposition => World::Quasisymmetric,
            _ => World::Asymmetric,
        }
    }
}

impl Serialize for BasisId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BasisId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BasisId::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::Unknown {
                what: "basis",
                name: s.to_string(),
            })
    }
}

/// An index of any species.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisIndex {
    Partition(Partition),
    Strong(StrongComposition),
    Weak(WeakComposition),
    Permutation(Permutation),
}

/// Serialized as its text form.
impl Serialize for BasisIndex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl BasisIndex {
    pub fn species(&self) -> Species {
        match self {
            BasisIndex::Partition(_) => Species::Partition,
            BasisIndex::Strong(_) => Species::StrongComposition,
            BasisIndex::Weak(_) => Species::WeakComposition,
            BasisIndex::Permutation(_) => Species::Permutation,
        }
    }

    /// Parses `text` as an index for `basis`.
    pub fn parse(basis: BasisId, text: &str) -> Result<Self> {
        let mismatch = || Error::SpeciesMismatch {
            basis: basis.name(),
            expected: basis.species().name(),
            got: text.to_string(),
        };
        match basis.species() {
            Species::Partition => text
                .parse()
                .map(BasisIndex::Partition)
                .map_err(|e| match e {
                    Error::InvalidPartition(_) => mismatch(),
                    other => other,
                }),
            Species::StrongComposition => text
                .parse()
                .map(BasisIndex::Strong)
                .map_err(|e| match e {
                    Error::InvalidStrongComposition(_) => mismatch(),
                    other => other,
                }),
            Species::WeakComposition => text.parse().map(BasisIndex::Weak),
            Species::Permutation => text.parse().map(BasisIndex::Permutation),
        }
    }

    /// Total degree of the corresponding basis element.
    pub fn degree(&self) -> u64 {
        match self {
            BasisIndex::Partition(p) => p.size(),
            BasisIndex::Strong(a) => a.size(),
            BasisIndex::Weak(a) => a.size(),
            BasisIndex::Permutation(p) => p.length() as u64,
        }
    }

    pub fn as_partition(&self) -> Option<&Partition> {
        match self {
            BasisIndex::Partition(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_strong(&self) -> Option<&StrongComposition> {
        match self {
            BasisIndex::Strong(a) => Some(a),
            _ => None,
        }
    }

    pub fn as_weak(&self) -> Option<&WeakComposition> {
        match self {
            BasisIndex::Weak(a) => Some(a),
            _ => None,
        }
    }

    pub fn as_permutation(&self) -> Option<&Permutation> {
        match self {
            BasisIndex::Permutation(p) => Some(p),
            _ => None,
        }
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisIndex::Partition(p) => p.fmt(f),
            BasisIndex::Strong(a) => a.fmt(f),
            BasisIndex::Weak(a) => a.fmt(f),
            BasisIndex::Permutation(p) => p.fmt(f),
        }
    }
}

impl From<Partition> for BasisIndex {
    fn from(p: Partition) -> Self {
        BasisIndex::Partition(p)
    }
}

impl From<StrongComposition> for BasisIndex {
    fn from(a: StrongComposition) -> Self {
        BasisIndex::Strong(a)
    }
}

impl From<WeakComposition> for BasisIndex {
    fn from(a: WeakComposition) -> Self {
        BasisIndex::Weak(a)
    }
}

impl From<Permutation> for BasisIndex {
    fn from(p: Permutation) -> Self {
        BasisIndex::Permutation(p)
    }
}

/// Every index of `basis` of the given degree whose element is a basis
/// member in `n` variables, in index order.
pub fn indices_of_degree(basis: BasisId, degree: u32, n: usize) -> Vec<BasisIndex> {
    let mut out: Vec<BasisIndex> = match basis {
        BasisId::Elementary => partitions(degree)
            .into_iter()
            .filter(|l| l.part(0) as usize <= n)
            .map(BasisIndex::Partition)
            .collect(),
        BasisId::MonomialSymmetric | BasisId::Homogeneous | BasisId::Schur => {
            partitions_max_len(degree, n)
                .into_iter()
                .map(BasisIndex::Partition)
                .collect()
        }
        BasisId::MonomialQuasisymmetric
        | BasisId::FundamentalQuasisymmetric
        | BasisId::QuasiSchur => strong_compositions(degree)
            .into_iter()
            .filter(|a| a.len() <= n)
            .map(BasisIndex::Strong)
            .collect(),
        BasisId::Schubert => weak_compositions(degree, n)
            .iter()
            .map(|c| BasisIndex::Permutation(code_to_permutation(c)))
            .collect(),
        _ => weak_compositions(degree, n)
            .into_iter()
            .map(BasisIndex::Weak)
            .collect(),
    };
    out.sort();
    out
}

/// Pads `a` to length `n`, rejecting indices longer than `n`.
pub(crate) fn fit_weak(a: &WeakComposition, n: usize) -> Result<WeakComposition> {
    if a.len() > n {
        return Err(Error::NTooSmall {
            index: a.to_string(),
            n,
        });
    }
    Ok(a.padded(n))
}

type CacheKey = (BasisId, BasisIndex, usize);

fn cache() -> &'static RwLock<HashMap<CacheKey, Arc<Polynomial>>> {
    static CACHE: OnceLock<RwLock<HashMap<CacheKey, Arc<Polynomial>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The basis element `basis[index]` in `n` variables, memoized.
pub fn basis_polynomial(basis: BasisId, index: &BasisIndex, n: usize) -> Result<Arc<Polynomial>> {
    let key = (basis, index.clone(), n);
    if let Some(p) = cache().read().expect("basis cache poisoned").get(&key) {
        return Ok(Arc::clone(p));
    }
    let p = Arc::new(compute_basis_polynomial(basis, index, n)?);
    cache()
        .write()
        .expect("basis cache poisoned")
        .insert(key, Arc::clone(&p));
    Ok(p)
}

/// Like [`basis_polynomial`] without the cache.
pub fn compute_basis_polynomial(basis: BasisId, index: &BasisIndex, n: usize) -> Result<Polynomial> {
    if index.species() != basis.species() {
        return Err(Error::SpeciesMismatch {
            basis: basis.name(),
            expected: basis.species().name(),
            got: index.to_string(),
        });
    }
    match (basis, index) {
        (BasisId::Monomial, BasisIndex::Weak(a)) => Ok(Polynomial::monomial(fit_weak(a, n)?)),
        (BasisId::MonomialSymmetric, BasisIndex::Partition(l)) => Ok(monomial_symmetric(l, n)),
        (BasisId::Elementary, BasisIndex::Partition(l)) => Ok(elementary(l, n)),
        (BasisId::Homogeneous, BasisIndex::Partition(l)) => Ok(homogeneous(l, n)),
        (BasisId::Schur, BasisIndex::Partition(l)) => Ok(schur(l, n)),
        (BasisId::MonomialQuasisymmetric, BasisIndex::Strong(a)) => {
            Ok(monomial_quasisymmetric(a, n))
        }
        (BasisId::FundamentalQuasisymmetric, BasisIndex::Strong(a)) => {
            Ok(fundamental_quasisymmetric(a, n))
        }
        (BasisId::QuasiSchur, BasisIndex::Strong(a)) => Ok(quasi_schur(a, n)),
        (BasisId::FundamentalSlide, BasisIndex::Weak(a)) => fundamental_slide(a, n),
        (BasisId::MonomialSlide, BasisIndex::Weak(a)) => monomial_slide(a, n),
        (BasisId::Particle, BasisIndex::Weak(a)) => particle(a, n),
        (BasisId::Atom, BasisIndex::Weak(a)) => atom(a, n),
        (BasisId::Quasikey, BasisIndex::Weak(a)) => quasikey(a, n),
        (BasisId::Key, BasisIndex::Weak(a)) => key_by_kohnert(a, n),
        (BasisId::Schubert, BasisIndex::Permutation(p)) => schubert_by_bjs(p, n),
        _ => unreachable!("species checked above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn text(basis: &str, index: &str, n: usize) -> String {
        let b: BasisId = basis.parse().unwrap();
        let i = BasisIndex::parse(b, index).unwrap();
        basis_polynomial(b, &i, n).unwrap().to_canonical_text()
    }

    #[test]
    fn names_round_trip() {
        for b in BasisId::ALL {
            assert_eq!(b.name().parse::<BasisId>().unwrap(), b);
        }
        assert!("foo".parse::<BasisId>().is_err());
    }

    #[test]
    fn species_mismatch() {
        assert!(matches!(
            BasisIndex::parse(BasisId::Schur, "(1,2)"),
            Err(Error::SpeciesMismatch { .. })
        ));
        assert!(matches!(
            BasisIndex::parse(BasisId::QuasiSchur, "(1,0)"),
            Err(Error::SpeciesMismatch { .. })
        ));
        let idx = BasisIndex::Weak(WeakComposition::new(vec![1]));
        assert!(compute_basis_polynomial(BasisId::Schur, &idx, 2).is_err());
    }

    #[test]
    fn monomial_basis() {
        assert_eq!(text("x", "(0,0)", 2), "1\t0,0\n");
        assert_eq!(text("x", "(1)", 3), "1\t1,0,0\n");
        assert!(basis_polynomial(BasisId::Monomial, &BasisIndex::parse(BasisId::Monomial, "(1,0,0)").unwrap(), 2).is_err());
    }

    #[test]
    fn key_021_text() {
        assert_eq!(
            text("key", "(0,2,1)", 3),
            "1\t2,1,0\n1\t2,0,1\n1\t1,2,0\n1\t1,1,1\n1\t0,2,1\n"
        );
    }
}
