//! Slide polynomials, particles, atoms, quasikeys and keys.

use super::fit_weak;
use crate::combinat::enumerate::{placements, refinements};
use crate::combinat::{canonical_reduced_word, dominance_leq, sorting_data, WeakComposition};
use crate::error::Result;
use crate::polynomial::{apply_operator_word, OperatorKind, Polynomial};
use crate::tableaux::{
    enumerate_composition_tableaux, enumerate_key_skylines, enumerate_particle_tableaux,
    kohnert_closure, BoxDiagram,
};

/// `Σ x^b` over `b ≥ a` in dominance with `b⁺` refining `a⁺`.
pub fn fundamental_slide(a: &WeakComposition, n: usize) -> Result<Polynomial> {
    let a = fit_weak(a, n)?;
    Ok(Polynomial::from_monomials(
        n,
        refinements(&a.positive_part())
            .iter()
            .flat_map(|beta| placements(beta, n))
            .filter(|b| dominance_leq(&a, b)),
    ))
}

/// `Σ x^b` over `b ≥ a` in dominance with `b⁺ = a⁺`.
pub fn monomial_slide(a: &WeakComposition, n: usize) -> Result<Polynomial> {
    let a = fit_weak(a, n)?;
    Ok(Polynomial::from_monomials(
        n,
        placements(&a.positive_part(), n)
            .into_iter()
            .filter(|b| dominance_leq(&a, b)),
    ))
}

/// Weights of the particle tableaux of shape `a`.
pub fn particle(a: &WeakComposition, n: usize) -> Result<Polynomial> {
    let a = fit_weak(a, n)?;
    Ok(Polynomial::from_monomials(
        n,
        enumerate_particle_tableaux(&a).iter().map(|t| t.weight(n)),
    ))
}

/// Weights of the semistandard composition tableaux of shape `a`.
pub fn atom(a: &WeakComposition, n: usize) -> Result<Polynomial> {
    let a = fit_weak(a, n)?;
    Ok(Polynomial::from_monomials(
        n,
        enumerate_composition_tableaux(&a).iter().map(|t| t.weight(n)),
    ))
}

/// Sum of the tableau generating functions of every shape `b ≥ a` with
/// `b⁺ = a⁺`.
pub fn quasikey(a: &WeakComposition, n: usize) -> Result<Polynomial> {
    let a = fit_weak(a, n)?;
    Ok(Polynomial::from_monomials(
        n,
        placements(&a.positive_part(), n)
            .into_iter()
            .filter(|b| dominance_leq(&a, b))
            .flat_map(|b| enumerate_composition_tableaux(&b))
            .map(|t| t.weight(n)),
    ))
}

/// Generating function of the Kohnert closure of the diagram of `a`.
pub fn key_by_kohnert(a: &WeakComposition, n: usize) -> Result<Polynomial> {
    let a = fit_weak(a, n)?;
    Ok(Polynomial::from_monomials(
        n,
        kohnert_closure(&BoxDiagram::of_composition(&a))
            .iter()
            .map(|d| d.weight(n)),
    ))
}

/// `π_{w(a)} x^{sort(a)}`.
pub fn key_by_operators(a: &WeakComposition, n: usize) -> Result<Polynomial> {
    let a = fit_weak(a, n)?;
    let data = sorting_data(&a);
    let word = canonical_reduced_word(&data.w);
    Ok(apply_operator_word(
        &word,
        OperatorKind::Demazure,
        &Polynomial::monomial(data.sort.to_weak(n)),
    ))
}

/// Weights of the key semi-skyline fillings for `a`.
pub fn key_by_skylines(a: &WeakComposition, n: usize) -> Result<Polynomial> {
    let a = fit_weak(a, n)?;
    Ok(Polynomial::from_monomials(
        n,
        enumerate_key_skylines(&a).iter().map(|t| t.weight(n)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wc(s: &str) -> WeakComposition {
        s.parse().unwrap()
    }

    #[test]
    fn examples_103() {
        let a = wc("(1,0,3)");
        assert_eq!(
            atom(&a, 3).unwrap().to_canonical_text(),
            "1\t2,1,1\n1\t2,0,2\n1\t1,2,1\n1\t1,1,2\n1\t1,0,3\n"
        );
        assert_eq!(
            quasikey(&a, 3).unwrap().to_canonical_text(),
            "1\t2,2,0\n1\t2,1,1\n1\t2,0,2\n1\t1,3,0\n1\t1,2,1\n1\t1,1,2\n1\t1,0,3\n"
        );
        assert_eq!(
            particle(&a, 3).unwrap().to_canonical_text(),
            "1\t1,2,1\n1\t1,1,2\n1\t1,0,3\n"
        );
    }

    #[test]
    fn key_constructions_agree_021() {
        let a = wc("(0,2,1)");
        let k = key_by_kohnert(&a, 3).unwrap();
        assert_eq!(k.len(), 5);
        assert_eq!(key_by_operators(&a, 3).unwrap(), k);
        assert_eq!(key_by_skylines(&a, 3).unwrap(), k);
    }

    #[test]
    fn slides_pad_and_reject() {
        let f = fundamental_slide(&wc("(0,1)"), 3).unwrap();
        assert_eq!(f.to_canonical_text(), "1\t1,0,0\n1\t0,1,0\n");
        assert!(monomial_slide(&wc("(0,0,0,1)"), 3).is_err());
    }
}
