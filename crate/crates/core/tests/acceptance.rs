//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use asympoly::bases::{
    atom, basis_polynomial, fundamental_quasisymmetric, key_alternatives, monomial_quasisymmetric,
    monomial_symmetric, particle, quasi_schur, quasikey, schubert_alternatives, schur, BasisId,
    BasisIndex,
};
use asympoly::combinat::{
    lehmer_code, lswap_closure, qlswap, FormalSum, Partition, Permutation, StrongComposition,
    WeakComposition,
};
use asympoly::expand::{expand_via_solver, stable_limit_probe, Family};
use asympoly::polynomial::Polynomial;
use asympoly::products::{
    combinatorial_product, conjecture_harness_reiner_shimozono, lr_coefficient,
    structure_constants, ProductRule,
};
use asympoly::verify::{
    composition_sweep, expansion_sweep, find_negative_structure_constant, key_agreement_sweep,
    positivity_sweep, product_rule_sweep, schubert_agreement_sweep, schubert_key_sweep,
    schur_agreement_sweep, SweepReport,
};
use num_bigint::BigInt;

type Check = Result<(), String>;
type ProductCase<'a> = (ProductRule, &'a str, &'a str, usize, &'a [(&'a str, i64)]);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn timed(limit: Duration, what: &str, f: impl FnOnce() -> Check) -> Check {
    let t = Instant::now();
    f()?;
    let took = t.elapsed();
    ensure(took <= limit, || format!("{what} took {took:?}, limit {limit:?}"))
}

fn sweep(r: SweepReport) -> Check {
    ensure(r.is_ok() && r.checked > 0, || r.to_string())
}

/// Monomials written as digit strings, e.g. `("130", 1)` for `x₁x₂³`.
fn poly(n: usize, terms: &[(&str, i64)]) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for (exps, c) in terms {
        let a = exps.chars().map(|d| d.to_digit(10).unwrap()).collect();
        p.add_term(WeakComposition::new(a), BigInt::from(*c));
    }
    p
}

fn same(label: &str, got: &Polynomial, want: &Polynomial) -> Check {
    ensure(got == want, || {
        format!("{label}:\n{}expected\n{}", got.to_canonical_text(), want.to_canonical_text())
    })
}

fn wc(s: &str) -> WeakComposition {
    s.parse().unwrap()
}

fn sc(s: &str) -> StrongComposition {
    s.parse().unwrap()
}

fn pt(s: &str) -> Partition {
    s.parse().unwrap()
}

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn err(e: asympoly::Error) -> String {
    e.to_string()
}

fn golden_examples() -> Check {
    let second = Duration::from_secs(1);
    timed(second, "schur", || {
        same("s_(2,1)", &schur(&pt("(2,1)"), 2), &poly(2, &[("21", 1), ("12", 1)]))
    })?;
    timed(second, "qsym", || {
        let m = poly(3, &[("130", 1), ("103", 1), ("013", 1)]);
        same("M_(1,3)", &monomial_quasisymmetric(&sc("(1,3)"), 3), &m)?;
        let f = poly(3, &[("130", 1), ("103", 1), ("013", 1), ("112", 1), ("121", 1)]);
        same("F_(1,3)", &fundamental_quasisymmetric(&sc("(1,3)"), 3), &f)
    })?;
    timed(second, "quasischur", || {
        let s = poly(
            3,
            &[
                ("130", 1),
                ("220", 1),
                ("103", 1),
                ("202", 1),
                ("112", 2),
                ("121", 1),
                ("211", 1),
                ("013", 1),
                ("022", 1),
            ],
        );
        let got = quasi_schur(&sc("(1,3)"), 3);
        ensure(got.coefficient_sum() == BigInt::from(10), || "S_(1,3) has 10 terms".into())?;
        same("S_(1,3)", &got, &s)
    })?;
    timed(second, "asymmetric", || {
        let a = wc("(1,0,3)");
        let at = poly(3, &[("103", 1), ("112", 1), ("202", 1), ("121", 1), ("211", 1)]);
        same("atom", &atom(&a, 3).map_err(err)?, &at)?;
        let qk = poly(
            3,
            &[("130", 1), ("220", 1), ("103", 1), ("112", 1), ("202", 1), ("121", 1), ("211", 1)],
        );
        same("quasikey", &quasikey(&a, 3).map_err(err)?, &qk)?;
        same("particle", &particle(&a, 3).map_err(err)?, &poly(3, &[("103", 1), ("112", 1), ("121", 1)]))
    })?;
    timed(second, "key", || {
        let want = poly(3, &[("021", 1), ("111", 1), ("201", 1), ("210", 1), ("120", 1)]);
        let alt = key_alternatives(&wc("(0,2,1)"), 3).map_err(err)?;
        same("key kohnert", &alt.kohnert, &want)?;
        same("key operators", &alt.operators, &want)?;
        same("key skylines", &alt.skylines, &want)
    })?;
    timed(second, "schubert", || {
        let alt = schubert_alternatives(&perm("321"), 3).map_err(err)?;
        ensure(alt.agree(), || "Schubert 321 constructions disagree".into())?;
        same("S_321", &alt.bjs, &poly(3, &[("210", 1)]))?;
        let want = poly(
            5,
            &[
                ("03100", 1),
                ("12100", 1),
                ("21100", 1),
                ("30100", 1),
                ("31000", 1),
                ("13000", 1),
                ("22000", 1),
            ],
        );
        let alt = schubert_alternatives(&perm("15324"), 5).map_err(err)?;
        same("S_15324 divided differences", &alt.divided_differences, &want)?;
        same("S_15324 bjs", &alt.bjs, &want)?;
        same("S_15324 pipe dreams", &alt.pipe_dreams, &want)?;
        same("S_15324 kohnert", &alt.kohnert, &want)
    })?;
    timed(second, "lehmer", || {
        let code = lehmer_code(&perm("2413"));
        ensure(code.padded(4) == wc("(1,2,0,0)"), || format!("code of 2413 is {code}"))
    })?;
    timed(second, "swaps", || {
        let a = wc("(1,0,3)");
        let l: Vec<WeakComposition> = lswap_closure(&a).into_iter().collect();
        let want: Vec<WeakComposition> = ["(1,0,3)", "(1,3,0)", "(3,0,1)", "(3,1,0)"].map(wc).to_vec();
        ensure(l == want, || format!("lswap(1,0,3) = {l:?}"))?;
        let q: Vec<WeakComposition> = qlswap(&a).into_iter().collect();
        let want: Vec<WeakComposition> = ["(1,0,3)", "(3,0,1)"].map(wc).to_vec();
        ensure(q == want, || format!("Qlswap(1,0,3) = {q:?}"))
    })?;
    timed(second, "lr", || {
        let c = lr_coefficient(&pt("(2,1)"), &pt("(2,1)"), &pt("(3,2,1)"));
        ensure(c == 2, || format!("c = {c}"))
    })
}

fn product_examples() -> Check {
    let slide_terms: &[(&str, i64)] = &[
        ("(2,0,0,3)", 1),
        ("(1,1,0,3)", 1),
        ("(2,0,2,1)", 1),
        ("(1,1,2,1)", 1),
        ("(2,0,1,2)", 1),
        ("(1,1,1,2)", 1),
        ("(1,2,0,2)", 1),
    ];
    let cases: [ProductCase; 4] = [
        (
            ProductRule::OverlappingShuffle,
            "(2)",
            "(1,2)",
            5,
            &[("(2,1,2)", 1), ("(1,2,2)", 2), ("(3,2)", 1), ("(1,4)", 1)],
        ),
        (
            ProductRule::Shuffle,
            "(2)",
            "(1,2)",
            5,
            &[
                ("(1,2,2)", 2),
                ("(1,1,2,1)", 1),
                ("(1,3,1)", 1),
                ("(2,2,1)", 1),
                ("(1,1,3)", 1),
                ("(2,1,2)", 1),
                ("(1,4)", 1),
                ("(2,3)", 1),
                ("(3,2)", 1),
            ],
        ),
        (ProductRule::Slide, "(0,1,0,2)", "(1,0,0,1)", 4, slide_terms),
        (ProductRule::OverlappingSlide, "(0,1,0,2)", "(1,0,0,1)", 4, slide_terms),
    ];
    for (rule, a, b, n, terms) in cases {
        let basis = rule.basis();
        let a = BasisIndex::parse(basis, a).map_err(err)?;
        let b = BasisIndex::parse(basis, b).map_err(err)?;
        let want: FormalSum<BasisIndex> = terms
            .iter()
            .map(|(c, k)| (BasisIndex::parse(basis, c).unwrap(), BigInt::from(*k)))
            .collect();
        let got = combinatorial_product(rule, &a, &b, n).map_err(err)?;
        ensure(got.terms() == &want, || format!("{rule} {a} {b}: {}", got.terms()))?;
        let solver = structure_constants(basis, &a, &b, n).map_err(err)?;
        ensure(solver == got, || format!("{rule} {a} {b}: solver {}", solver.terms()))?;
    }
    sweep(product_rule_sweep(3, 4))
}

fn agreement_sweeps() -> Check {
    let minute = Duration::from_secs(60);
    timed(minute, "schubert agreement", || {
        let r = schubert_agreement_sweep(5);
        ensure(r.checked == 120, || format!("checked {}", r.checked))?;
        sweep(r)
    })?;
    timed(minute, "key agreement", || sweep(key_agreement_sweep(3, 4)))?;
    timed(minute, "schur agreement", || sweep(schur_agreement_sweep(5, 4)))
}

fn expansion_sweeps() -> Check {
    sweep(expansion_sweep(3, 4))?;
    sweep(composition_sweep(3, 4))?;
    let r = schubert_key_sweep(4);
    ensure(r.checked == 24, || format!("checked {}", r.checked))?;
    sweep(r)
}

fn positivity_evidence() -> Check {
    sweep(positivity_sweep(3, 4))?;
    let w = find_negative_structure_constant(BasisId::QuasiSchur, 3, 0).map_err(err)?;
    let w = w.ok_or("no negative quasiSchur structure constant found")?;
    println!("  quasiSchur witness: {w}");
    Ok(())
}

fn non_symmetry() -> Check {
    let n = 4;
    let f31 = fundamental_quasisymmetric(&sc("(3,1)"), n);
    let f13 = fundamental_quasisymmetric(&sc("(1,3)"), n);
    let f = &f31 + &f13;
    let sym = &(&monomial_symmetric(&pt("(3,1)"), n) + &monomial_symmetric(&pt("(2,1,1)"), n))
        + &monomial_symmetric(&pt("(1,1,1,1)"), n).scaled(&BigInt::from(2));
    same("f_31 - symmetric part", &(&f - &sym), &monomial_quasisymmetric(&sc("(1,2,1)"), n))?;
    let e = expand_via_solver(&f, BasisId::MonomialQuasisymmetric).map_err(err)?;
    let want: FormalSum<BasisIndex> = [
        ("(3,1)", 1),
        ("(2,1,1)", 1),
        ("(1,2,1)", 2),
        ("(1,1,2)", 1),
        ("(1,3)", 1),
        ("(1,1,1,1)", 2),
    ]
    .iter()
    .map(|(c, k)| (BasisIndex::Strong(sc(c)), BigInt::from(*k)))
    .collect();
    ensure(e.terms() == &want, || format!("M expansion {}", e.terms()))?;
    ensure(!f.is_symmetric(), || "f_31 reported symmetric".into())?;
    ensure(f.is_quasisymmetric(), || "f_31 reported not quasisymmetric".into())
}

fn stabilization() -> Check {
    let a = wc("(1,0,3)");
    for family in [Family::Key, Family::Quasikey] {
        let r = stable_limit_probe(family, &a, 4, a.size() as usize).map_err(err)?;
        let at = r.stabilized_at();
        ensure(at.is_some_and(|m| m < 4), || format!("{family:?} probe:\n{r}"))?;
        println!("  {family:?} stable from m={}", at.unwrap());
    }
    let s31 = schur(&pt("(3,1)"), 4);
    let key = basis_polynomial(BasisId::Key, &BasisIndex::Weak(a.prepend_zeros(4)), 7).map_err(err)?;
    same("key limit", &key.restrict(4), &s31)?;
    let q13 = quasi_schur(&sc("(1,3)"), 4);
    let qk = basis_polynomial(BasisId::Quasikey, &BasisIndex::Weak(a.prepend_zeros(4)), 7).map_err(err)?;
    same("quasikey limit", &qk.restrict(4), &q13)
}

fn conjecture() -> Check {
    timed(Duration::from_secs(300), "reiner-shimozono", || {
        let r = conjecture_harness_reiner_shimozono(2, 3).map_err(err)?;
        println!("  checked {} pairs, max coefficient {}", r.checked_pairs, r.max_coefficient);
        ensure(r.holds(), || r.to_string())
    })
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Check);
    let criteria: [Criterion; 8] = [
        ("golden examples", golden_examples),
        ("product rules", product_examples),
        ("multi-formula agreement", agreement_sweeps),
        ("expansion rules", expansion_sweeps),
        ("positivity and negativity", positivity_evidence),
        ("non-symmetry", non_symmetry),
        ("stabilization", stabilization),
        ("reiner-shimozono harness", conjecture),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match check() {
            Ok(()) => println!("PASS {} {name} ({:.2?})", i + 1, t.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("FAIL {} {name} ({:.2?})\n{msg}", i + 1, t.elapsed());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
