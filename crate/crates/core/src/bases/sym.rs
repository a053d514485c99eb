//! Monomial, elementary, homogeneous and Schur polynomials.

use crate::combinat::enumerate::rearrangements;
use crate::combinat::{Partition, WeakComposition};
use crate::polynomial::{alternant, vandermonde, Polynomial};
use crate::tableaux::enumerate_ssyt;

/// Sum of all distinct rearrangements of `λ` padded to length `n`.
pub fn monomial_symmetric(lambda: &Partition, n: usize) -> Polynomial {
    if lambda.len() > n {
        return Polynomial::zero(n);
    }
    Polynomial::from_monomials(n, rearrangements(lambda.to_weak(n).entries()))
}

/// Generating function of semistandard Young tableaux of shape `λ` with
/// labels at most `n`.
pub fn schur(lambda: &Partition, n: usize) -> Polynomial {
    Polynomial::from_monomials(
        n,
        enumerate_ssyt(lambda, &Partition::empty(), n as u32)
            .iter()
            .map(|t| t.weight(n)),
    )
}

/// `ĵ_{λ+δ} / ĵ_δ`.
pub fn schur_bialternant(lambda: &Partition, n: usize) -> Polynomial {
    if lambda.len() > n {
        return Polynomial::zero(n);
    }
    let shifted = WeakComposition::new(
        (0..n)
            .map(|i| lambda.part(i) + (n - 1 - i) as u32)
            .collect(),
    );
    alternant(&shifted)
        .div_exact(&vandermonde(n))
        .expect("alternants are divisible by the Vandermonde determinant")
}

fn product_of_schurs(parts: impl Iterator<Item = Partition>, n: usize) -> Polynomial {
    parts.fold(Polynomial::one(n), |acc, p| &acc * &schur(&p, n))
}

/// `e_λ = ∏ s_{1^{λ_i}}`.
pub fn elementary(lambda: &Partition, n: usize) -> Polynomial {
    product_of_schurs(
        lambda
            .entries()
            .iter()
            .map(|&k| Partition::new_unchecked(vec![1; k as usize])),
        n,
    )
}

/// `h_λ = ∏ s_{(λ_i)}`.
pub fn homogeneous(lambda: &Partition, n: usize) -> Polynomial {
    product_of_schurs(
        lambda.entries().iter().map(|&k| Partition::new_unchecked(vec![k])),
        n,
    )
}
