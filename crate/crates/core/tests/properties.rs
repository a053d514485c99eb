use asympoly::bases::{atom, basis_polynomial, BasisId, BasisIndex};
use asympoly::combinat::{
    code_to_permutation, dominance_leq, lehmer_code, lswap_closure, Partition, Permutation,
    StrongComposition, WeakComposition,
};
use asympoly::expand::{combinatorial_expansion, expand_via_solver, round_trip};
use asympoly::polynomial::{divided_difference, Polynomial};
use asympoly::products::{
    lr_coefficient, overlapping_shuffle_product, shuffle_product, slide_product,
    structure_constants, ProductRule,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::FileFailurePersistence;

const N: usize = 3;

fn weak(max_entry: u32, len: usize) -> impl Strategy<Value = WeakComposition> {
    prop::collection::vec(0..=max_entry, len).prop_map(WeakComposition::new)
}

fn strong(max_part: u32, max_len: usize) -> impl Strategy<Value = StrongComposition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|v| StrongComposition::new(v).unwrap())
}

fn partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|x, y| y.cmp(x));
        Partition::new(v).unwrap()
    })
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((weak(3, N), -5i64..=5), 0..6).prop_map(|terms| {
        let mut p = Polynomial::zero(N);
        for (a, c) in terms {
            p.add_term(a, BigInt::from(c));
        }
        p
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn index(basis: BasisId) -> BoxedStrategy<BasisIndex> {
    use asympoly::bases::Species;
    match basis.species() {
        Species::WeakComposition => weak(2, N).prop_map(BasisIndex::Weak).boxed(),
        Species::StrongComposition => strong(2, N).prop_map(BasisIndex::Strong).boxed(),
        Species::Partition => partition(2, N)
            .prop_filter("fits in n variables", move |l| basis != BasisId::Elementary || l.part(0) as usize <= N)
            .prop_map(BasisIndex::Partition)
            .boxed(),
        Species::Permutation => permutation(N).prop_map(BasisIndex::Permutation).boxed(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: Some(Box::new(FileFailurePersistence::Off)),
        ..ProptestConfig::default()
    })]

    #[test]
    fn ring_laws(f in polynomial(), g in polynomial(), h in polynomial()) {
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn canonical_text_round_trips(f in polynomial()) {
        let text = f.to_canonical_text();
        prop_assert_eq!(Polynomial::parse_canonical(&text, N).unwrap(), f);
    }

    #[test]
    fn divided_difference_kills_symmetric(f in polynomial(), i in 1..N) {
        let sym = &f + &f.swap_variables(i);
        prop_assert!(divided_difference(i, &sym).is_zero());
    }

    #[test]
    fn lehmer_code_inverts(p in permutation(5)) {
        prop_assert_eq!(code_to_permutation(&lehmer_code(&p)).trimmed(), p.trimmed());
    }

    #[test]
    fn dominance_is_a_partial_order(a in weak(3, 4), b in weak(3, 4)) {
        prop_assert!(dominance_leq(&a, &a));
        if dominance_leq(&a, &b) && dominance_leq(&b, &a) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn solver_is_identity_on_basis_elements(
        (basis, idx) in prop::sample::select(BasisId::ALL.to_vec())
            .prop_flat_map(|b| (Just(b), index(b)))
    ) {
        prop_assert!(round_trip(basis, &idx, N).unwrap());
    }

    #[test]
    fn key_is_sum_of_atoms_over_left_swaps(a in weak(2, N)) {
        let key = basis_polynomial(BasisId::Key, &BasisIndex::Weak(a.clone()), N).unwrap();
        let mut sum = Polynomial::zero(N);
        for b in lswap_closure(&a) {
            sum = &sum + &atom(&b, N).unwrap();
        }
        prop_assert_eq!(&*key, &sum);
    }

    #[test]
    fn key_expansions_are_nonnegative(a in weak(2, N)) {
        let idx = BasisIndex::Weak(a);
        for target in [BasisId::Atom, BasisId::Quasikey, BasisId::FundamentalSlide] {
            let e = expand_via_solver(&basis_polynomial(BasisId::Key, &idx, N).unwrap(), target).unwrap();
            prop_assert!(e.is_nonnegative());
        }
        let direct = combinatorial_expansion(BasisId::Key, &idx, BasisId::Atom, N).unwrap();
        prop_assert!(direct.is_nonnegative());
    }

    #[test]
    fn shuffles_commute_and_count(a in strong(3, 3), b in strong(3, 3)) {
        let s = shuffle_product(&a, &b);
        prop_assert_eq!(&s, &shuffle_product(&b, &a));
        let (p, q) = (a.size(), b.size());
        let binomial = (1..=q).fold(1u64, |acc, k| acc * (p + k) / k);
        prop_assert_eq!(s.total(), BigInt::from(binomial));
        prop_assert_eq!(overlapping_shuffle_product(&a, &b), overlapping_shuffle_product(&b, &a));
    }

    #[test]
    fn slide_product_matches_polynomial_product(a in weak(2, N), b in weak(2, N)) {
        let got = slide_product(&a, &b).unwrap();
        let (ia, ib) = (BasisIndex::Weak(a), BasisIndex::Weak(b));
        let solver = structure_constants(ProductRule::Slide.basis(), &ia, &ib, N).unwrap();
        prop_assert_eq!(got.map_indices(|c| BasisIndex::Weak(c.clone())), solver.terms().clone());
    }

    #[test]
    fn lr_is_symmetric(l in partition(3, 2), m in partition(3, 2), n in partition(4, 3)) {
        prop_assert_eq!(lr_coefficient(&l, &m, &n), lr_coefficient(&m, &l, &n));
    }
}
