//! Positive combinatorial expansions between bases.

use num_bigint::BigInt;

use super::BasisExpansion;
use crate::bases::{fit_weak, BasisId, BasisIndex};
use crate::combinat::enumerate::{partitions_max_len, placements, rearrangements, refinements};
use crate::combinat::{
    dominance_leq, lswap_closure, qlswap, FormalSum, Partition, Permutation, StrongComposition,
    WeakComposition,
};
use crate::error::{Error, Result};
use crate::tableaux::{
    enumerate_composition_tableaux, enumerate_particle_tableaux, enumerate_pipe_dreams,
    enumerate_ssyt_with_content,
};

use BasisId::*;

const RULES: [(BasisId, BasisId); 23] = [
    (Elementary, Schur),
    (Homogeneous, Schur),
    (Schur, MonomialSymmetric),
    (Schur, QuasiSchur),
    (MonomialSymmetric, MonomialQuasisymmetric),
    (QuasiSchur, FundamentalQuasisymmetric),
    (FundamentalQuasisymmetric, MonomialQuasisymmetric),
    (Schur, Key),
    (QuasiSchur, Quasikey),
    (QuasiSchur, Atom),
    (FundamentalQuasisymmetric, FundamentalSlide),
    (MonomialQuasisymmetric, MonomialSlide),
    (Schubert, FundamentalSlide),
    (Key, Quasikey),
    (Key, Atom),
    (Quasikey, FundamentalSlide),
    (Quasikey, Atom),
    (FundamentalSlide, MonomialSlide),
    (FundamentalSlide, Particle),
    (Atom, Particle),
    (Particle, Monomial),
    (MonomialSlide, Monomial),
    (FundamentalSlide, Monomial),
];

/// Every `(source, target)` pair with a combinatorial rule.
pub fn rule_pairs() -> &'static [(BasisId, BasisId)] {
    &RULES
}

/// Expands `source[index]` in `target` by the combinatorial rule for the
/// pair, in `n` variables. Terms whose basis element vanishes in `n`
/// variables are dropped.
pub fn combinatorial_expansion(
    source: BasisId,
    index: &BasisIndex,
    target: BasisId,
    n: usize,
) -> Result<BasisExpansion> {
    if index.species() != source.species() {
        return Err(Error::SpeciesMismatch {
            basis: source.name(),
            expected: source.species().name(),
            got: index.to_string(),
        });
    }
    let unsupported = || Error::UnsupportedPair {
        source_basis: source.name(),
        target: target.name(),
    };
    if !RULES.contains(&(source, target)) {
        return Err(unsupported());
    }
    let terms: FormalSum<BasisIndex> = match index {
        BasisIndex::Partition(l) => partition_rule(source, l, target, n),
        BasisIndex::Strong(alpha) => strong_rule(source, alpha, target, n)?,
        BasisIndex::Weak(a) => weak_rule(source, &fit_weak(a, n)?, target, n),
        BasisIndex::Permutation(p) => schubert_to_slide(p, n)?,
    };
    Ok(BasisExpansion::new(target, n, terms))
}

/// Re-expands every term of `e` in `target` by its rule.
pub fn compose_expansion(e: &BasisExpansion, target: BasisId) -> Result<BasisExpansion> {
    let mut terms = FormalSum::new();
    for (index, c) in e.terms().iter() {
        let step = combinatorial_expansion(e.basis(), index, target, e.n())?;
        terms += &step.terms().scaled(c);
    }
    Ok(BasisExpansion::new(target, e.n(), terms))
}

fn ones<I: Ord + Clone>(items: impl IntoIterator<Item = I>) -> FormalSum<I> {
    let mut s = FormalSum::new();
    for i in items {
        s.add_term(i, 1);
    }
    s
}

fn weak_sum(items: impl IntoIterator<Item = WeakComposition>) -> FormalSum<BasisIndex> {
    ones(items.into_iter().map(BasisIndex::Weak))
}

fn strong_sum(items: impl IntoIterator<Item = StrongComposition>) -> FormalSum<BasisIndex> {
    ones(items.into_iter().map(BasisIndex::Strong))
}

/// Number of semistandard tableaux of shape `shape` and content `content`.
fn kostka(shape: &Partition, content: &Partition) -> usize {
    let content = WeakComposition::new(content.entries().to_vec());
    enumerate_ssyt_with_content(shape, &Partition::empty(), &content).len()
}

fn partition_rule(
    source: BasisId,
    l: &Partition,
    target: BasisId,
    n: usize,
) -> FormalSum<BasisIndex> {
    let mut out = FormalSum::new();
    match (source, target) {
        (Elementary | Homogeneous | Schur, Schur | MonomialSymmetric) => {
            for mu in partitions_max_len(l.size() as u32, n) {
                let k = match source {
                    Elementary => kostka(&mu.conjugate(), l),
                    Homogeneous => kostka(&mu, l),
                    _ => kostka(l, &mu),
                };
                out.add_term(BasisIndex::Partition(mu), k);
            }
        }
        (Schur, QuasiSchur) | (MonomialSymmetric, MonomialQuasisymmetric) => {
            if l.len() <= n {
                out = strong_sum(
                    rearrangements(l.entries())
                        .into_iter()
                        .map(|a| a.positive_part()),
                );
            }
        }
        (Schur, Key) => {
            if l.len() <= n {
                out = weak_sum([l.to_weak(n).reversed()]);
            }
        }
        _ => unreachable!("pair checked against the rule table"),
    }
    out
}

fn strong_rule(
    source: BasisId,
    alpha: &StrongComposition,
    target: BasisId,
    n: usize,
) -> Result<FormalSum<BasisIndex>> {
    if alpha.len() > n {
        return Ok(FormalSum::new());
    }
    Ok(match (source, target) {
        (FundamentalQuasisymmetric, MonomialQuasisymmetric) => strong_sum(
            refinements(alpha)
                .into_iter()
                .filter(|beta| beta.len() <= n),
        ),
        (QuasiSchur, FundamentalQuasisymmetric) => {
            let mut out = FormalSum::new();
            for a in placements(alpha, n) {
                for t in enumerate_composition_tableaux(&a) {
                    if t.is_initial() && t.is_quasi_yamanouchi() {
                        out.add_term(BasisIndex::Strong(t.weight(n).positive_part()), 1);
                    }
                }
            }
            out
        }
        (QuasiSchur, Atom) => weak_sum(placements(alpha, n)),
        (QuasiSchur, Quasikey)
        | (FundamentalQuasisymmetric, FundamentalSlide)
        | (MonomialQuasisymmetric, MonomialSlide) => weak_sum([alpha.right_justified(n)]),
        _ => unreachable!("pair checked against the rule table"),
    })
}

/// Weak compositions `b` of the length of `a` with `b⁺ = a⁺` and `b ≥ a`.
fn same_shape_above(a: &WeakComposition) -> Vec<WeakComposition> {
    placements(&a.positive_part(), a.len())
        .into_iter()
        .filter(|b| dominance_leq(a, b))
        .collect()
}

fn weak_rule(
    source: BasisId,
    a: &WeakComposition,
    target: BasisId,
    n: usize,
) -> FormalSum<BasisIndex> {
    match (source, target) {
        (Key, Atom) => weak_sum(lswap_closure(a)),
        (Key, Quasikey) => weak_sum(qlswap(a)),
        (Quasikey, Atom) | (FundamentalSlide, Particle) => weak_sum(same_shape_above(a)),
        (Quasikey, FundamentalSlide) => {
            let support = a.support();
            let mut out = FormalSum::new();
            for b in same_shape_above(a) {
                for t in enumerate_composition_tableaux(&b) {
                    let wt = t.weight(n);
                    let wt_support = wt.support();
                    if t.is_quasi_yamanouchi() && support.iter().all(|i| wt_support.contains(i)) {
                        out.add_term(BasisIndex::Weak(wt), 1);
                    }
                }
            }
            out
        }
        (Atom, Particle) => {
            let mut out = FormalSum::new();
            for t in enumerate_composition_tableaux(a) {
                if t.is_particle_highest() {
                    out.add_term(BasisIndex::Weak(t.weight(n)), 1);
                }
            }
            out
        }
        (FundamentalSlide, MonomialSlide) => {
            let candidates: Vec<WeakComposition> = refinements(&a.positive_part())
                .iter()
                .flat_map(|beta| placements(beta, n))
                .filter(|b| dominance_leq(a, b))
                .collect();
            weak_sum(candidates.into_iter().filter(|b| {
                placements(&b.positive_part(), n)
                    .iter()
                    .filter(|c| dominance_leq(a, c))
                    .all(|c| dominance_leq(b, c))
            }))
        }
        (MonomialSlide, Monomial) => weak_sum(same_shape_above(a)),
        (FundamentalSlide, Monomial) => weak_sum(
            refinements(&a.positive_part())
                .iter()
                .flat_map(|beta| placements(beta, n))
                .filter(|b| dominance_leq(a, b)),
        ),
        (Particle, Monomial) => {
            let mut out = FormalSum::new();
            for t in enumerate_particle_tableaux(a) {
                out.add_term(BasisIndex::Weak(t.weight(n)), BigInt::from(1));
            }
            out
        }
        _ => unreachable!("pair checked against the rule table"),
    }
}

/// Quasi-Yamanouchi reduced pipe dreams, each contributing the slide of
/// its weight.
fn schubert_to_slide(p: &Permutation, n: usize) -> Result<FormalSum<BasisIndex>> {
    let last_descent = p.descents().into_iter().max().unwrap_or(0);
    if last_descent > n {
        return Err(Error::NTooSmall {
            index: p.to_string(),
            n,
        });
    }
    Ok(weak_sum(
        enumerate_pipe_dreams(p)
            .into_iter()
            .filter(|d| d.is_quasi_yamanouchi())
            .map(|d| d.weight(n)),
    ))
}
