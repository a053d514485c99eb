use num_bigint::BigInt;

use super::Polynomial;
use crate::combinat::{Permutation, WeakComposition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    /// `∂_i f = (f − s_i f) / (x_i − x_{i+1})`.
    DividedDifference,
    /// `π_i f = ∂_i(x_i f)`.
    Demazure,
}

/// `∂_i f` for `1 ≤ i < n`.
///
/// Panics if `i` is out of range or if the division leaves a remainder,
/// which cannot happen for a correct polynomial implementation.
pub fn divided_difference(i: usize, f: &Polynomial) -> Polynomial {
    let n = f.nvars();
    assert!(i >= 1 && i < n, "operator index {i} out of range for {n} variables");
    let numerator = f - &f.swap_variables(i);
    let denominator = &Polynomial::variable(n, i) - &Polynomial::variable(n, i + 1);
    numerator
        .div_exact(&denominator)
        .expect("antisymmetric numerator must divide exactly")
}

/// `π_i f` for `1 ≤ i < n`.
pub fn demazure(i: usize, f: &Polynomial) -> Polynomial {
    divided_difference(i, &(&Polynomial::variable(f.nvars(), i) * f))
}

/// Applies `T_{i_1} ⋯ T_{i_r}` to `f`, so the last letter acts first.
pub fn apply_operator_word(word: &[u32], kind: OperatorKind, f: &Polynomial) -> Polynomial {
    word.iter().rev().fold(f.clone(), |acc, &i| match kind {
        OperatorKind::DividedDifference => divided_difference(i as usize, &acc),
        OperatorKind::Demazure => demazure(i as usize, &acc),
    })
}

/// `Σ_σ sgn(σ) x^{σ(a)}` over `S_n`, `n = a.len()`.
pub fn alternant(a: &WeakComposition) -> Polynomial {
    let n = a.len();
    let mut sorted = a.entries().to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Polynomial::zero(n);
    }
    let mut out = Polynomial::zero(n);
    for sigma in Permutation::all(n) {
        let mut e = vec![0; n];
        for (i, &x) in a.entries().iter().enumerate() {
            e[sigma.apply(i + 1) - 1] = x;
        }
        out.add_term(WeakComposition::new(e), BigInt::from(sigma.sign()));
    }
    out
}

/// `∏_{i<j} (x_i − x_j)`, computed as the alternant of the staircase.
pub fn vandermonde(n: usize) -> Polynomial {
    alternant(&WeakComposition::new((0..n as u32).rev().collect()))
}
