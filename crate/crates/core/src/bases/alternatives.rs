//! Side-by-side constructions of the same basis element, for cross-checks.

use serde::Serialize;

use super::asym::{key_by_kohnert, key_by_operators, key_by_skylines};
use super::schubert::{
    schubert_by_bjs, schubert_by_divided_differences, schubert_by_kohnert,
    schubert_by_pipe_dreams, schur_permutation,
};
use super::sym::{schur, schur_bialternant};
use crate::combinat::{Partition, Permutation, WeakComposition};
use crate::error::Result;
use crate::polynomial::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchubertAlternatives {
    pub divided_differences: Polynomial,
    pub bjs: Polynomial,
    pub pipe_dreams: Polynomial,
    pub kohnert: Polynomial,
}

impl SchubertAlternatives {
    pub fn agree(&self) -> bool {
        self.bjs == self.divided_differences
            && self.bjs == self.pipe_dreams
            && self.bjs == self.kohnert
    }
}

pub fn schubert_alternatives(p: &Permutation, n: usize) -> Result<SchubertAlternatives> {
    Ok(SchubertAlternatives {
        divided_differences: schubert_by_divided_differences(p, n)?,
        bjs: schubert_by_bjs(p, n)?,
        pipe_dreams: schubert_by_pipe_dreams(p, n)?,
        kohnert: schubert_by_kohnert(p, n)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KeyAlternatives {
    pub kohnert: Polynomial,
    pub operators: Polynomial,
    pub skylines: Polynomial,
}

impl KeyAlternatives {
    pub fn agree(&self) -> bool {
        self.kohnert == self.operators && self.kohnert == self.skylines
    }
}

pub fn key_alternatives(a: &WeakComposition, n: usize) -> Result<KeyAlternatives> {
    Ok(KeyAlternatives {
        kohnert: key_by_kohnert(a, n)?,
        operators: key_by_operators(a, n)?,
        skylines: key_by_skylines(a, n)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchurAlternatives {
    pub littlewood: Polynomial,
    pub bialternant: Polynomial,
    pub schubert: Polynomial,
    pub key: Polynomial,
}

impl SchurAlternatives {
    pub fn agree(&self) -> bool {
        self.littlewood == self.bialternant
            && self.littlewood == self.schubert
            && self.littlewood == self.key
    }
}

/// Requires `λ` to have at most `n` parts.
pub fn schur_alternatives(lambda: &Partition, n: usize) -> Result<SchurAlternatives> {
    let reversed = lambda.to_weak(n).reversed();
    Ok(SchurAlternatives {
        littlewood: schur(lambda, n),
        bialternant: schur_bialternant(lambda, n),
        schubert: schubert_by_bjs(&schur_permutation(lambda, n), n)?,
        key: key_by_kohnert(&reversed, n)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schur_21() {
        let alt = schur_alternatives(&Partition::new(vec![2, 1]).unwrap(), 2).unwrap();
        assert!(alt.agree());
        assert_eq!(alt.littlewood.len(), 2);
        let empty = schur_alternatives(&Partition::empty(), 3).unwrap();
        assert!(empty.agree());
        assert_eq!(empty.key, Polynomial::one(3));
    }
}
