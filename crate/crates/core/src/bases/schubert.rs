//! Schubert polynomials by four independent constructions.

use crate::combinat::{code_to_permutation, reduced_words, Partition, Permutation, WeakComposition};
use crate::error::{Error, Result};
use crate::polynomial::{apply_operator_word, OperatorKind, Polynomial};
use crate::tableaux::{enumerate_compatible, enumerate_pipe_dreams, kohnert_closure, BoxDiagram};

fn working_size(p: &Permutation, n: usize) -> usize {
    p.trimmed().size().max(n).max(1)
}

/// Moves a polynomial computed in `N ≥ n` variables into `n` variables,
/// failing if it involves a variable beyond `x_n`.
fn fit_vars(f: Polynomial, p: &Permutation, n: usize) -> Result<Polynomial> {
    if f.support_vars() > n {
        return Err(Error::NTooSmall {
            index: p.to_string(),
            n,
        });
    }
    Ok(f.restrict(n))
}

/// Sum over reduced words `α` of `p` and compatible sequences `β` of
/// `∏ x_{β_i}`.
pub fn schubert_by_bjs(p: &Permutation, n: usize) -> Result<Polynomial> {
    let size = working_size(p, n);
    let mut f = Polynomial::zero(size);
    for alpha in reduced_words(p) {
        for beta in enumerate_compatible(&alpha) {
            let mut e = vec![0u32; size];
            for &b in beta.entries() {
                e[b as usize - 1] += 1;
            }
            f.add_term(WeakComposition::new(e), 1.into());
        }
    }
    fit_vars(f, p, n)
}

/// `∂_{i_1} ⋯ ∂_{i_k} x^{(N-1, …, 1, 0)}`, climbing from `p` to the
/// longest element of `S_N` through ascents.
pub fn schubert_by_divided_differences(p: &Permutation, n: usize) -> Result<Polynomial> {
    let size = p.trimmed().size().max(1);
    let longest = Permutation::longest(size);
    let mut cur = p.trimmed().padded(size);
    let mut word = Vec::new();
    while cur != longest {
        let i = (1..size)
            .find(|&i| cur.apply(i) < cur.apply(i + 1))
            .expect("a non-longest permutation has an ascent");
        word.push(i as u32);
        cur = cur.swap_positions(i);
    }
    let staircase = Polynomial::monomial(WeakComposition::new(
        (0..size as u32).rev().collect(),
    ));
    let f = apply_operator_word(&word, OperatorKind::DividedDifference, &staircase);
    fit_vars(f.restrict(size.max(n)), p, n)
}

/// Generating function of reduced pipe dreams for `p`.
pub fn schubert_by_pipe_dreams(p: &Permutation, n: usize) -> Result<Polynomial> {
    let size = working_size(p, n);
    let f = Polynomial::from_monomials(
        size,
        enumerate_pipe_dreams(p).iter().map(|d| d.weight(size)),
    );
    fit_vars(f, p, n)
}

/// Generating function of the Kohnert closure of the Rothe diagram of `p`.
pub fn schubert_by_kohnert(p: &Permutation, n: usize) -> Result<Polynomial> {
    let size = working_size(p, n);
    let f = Polynomial::from_monomials(
        size,
        kohnert_closure(&BoxDiagram::rothe(p))
            .iter()
            .map(|d| d.weight(size)),
    );
    fit_vars(f, p, n)
}

/// The permutation whose code is `λ` padded to length `n` and reversed.
pub fn schur_permutation(lambda: &Partition, n: usize) -> Permutation {
    code_to_permutation(&lambda.to_weak(n).reversed())
}
