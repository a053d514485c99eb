//! Monomial, fundamental and quasiSchur quasisymmetric polynomials.

use crate::combinat::enumerate::{placements, refinements};
use crate::combinat::StrongComposition;
use crate::polynomial::Polynomial;
use crate::tableaux::enumerate_composition_tableaux;

/// `Σ x^b` over `b` of length `n` with `b⁺ = α`.
pub fn monomial_quasisymmetric(alpha: &StrongComposition, n: usize) -> Polynomial {
    Polynomial::from_monomials(n, placements(alpha, n))
}

/// `Σ x^b` over `b` of length `n` with `b⁺` refining `α`.
pub fn fundamental_quasisymmetric(alpha: &StrongComposition, n: usize) -> Polynomial {
    Polynomial::from_monomials(
        n,
        refinements(alpha).iter().flat_map(|beta| placements(beta, n)),
    )
}

/// Weights of semistandard composition tableaux over all shapes `a` of
/// length `n` with `a⁺ = α`.
pub fn quasi_schur(alpha: &StrongComposition, n: usize) -> Polynomial {
    Polynomial::from_monomials(
        n,
        placements(alpha, n)
            .iter()
            .flat_map(enumerate_composition_tableaux)
            .map(|t| t.weight(n)),
    )
}
