//! Acceptance gate. Each criterion prints one PASS/FAIL line; the process
//! exits nonzero if any criterion fails or exceeds its time budget.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use proptest::test_runner::{Config, TestRunner};

use surfrr_core::bockstein::{build_model, compute_page, verify_closed_form_pages, ModelKind};
use surfrr_core::chern::{
    bh_log_identity_check, bh_psi_identity_check, ch, conjugate_minus_one, double_loop_scalar,
    psi_h, rk_eigenvalue, s_eval,
};
use surfrr_core::dyerlashof::{akita_counterexample, q_on_bu, Residue};
use surfrr_core::exact::{
    choose_k, denominator_valuation_check_with, num_denom, vp, BernoulliTable,
    Valuation,
};
use surfrr_core::kops::{
    artin_hasse_vs_log_display, double_loop_sign, psi, r_polynomial_identity,
    rho_defining_relation, theta, SignComparison,
};
use surfrr_core::{Error, ExactFraction, KClass};

use common::*;

const BUDGET: Duration = Duration::from_secs(10);

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: surfrr_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn to_rational(q: &ExactFraction) -> BigRational {
    q.as_rational().clone()
}

fn bernoulli_suite() -> Result<String, String> {
    let table = lib(BernoulliTable::new(30))?;
    // z/(e^z - 1) times (e^z - 1)/z must be 1 through z^60.
    let series = table.rebuild_series();
    for m in 0..=60usize {
        let c: BigRational = (0..=m)
            .map(|i| {
                to_rational(&series[i])
                    * to_rational(&ExactFraction::inv_factorial((m - i + 1) as u32))
            })
            .sum();
        let expect = if m == 0 {
            BigRational::one()
        } else {
            BigRational::zero()
        };
        ensure(c == expect, || format!("series product wrong at z^{m}"))?;
    }
    let oracle = bernoulli_by_recursion(30);
    for (i, b) in oracle.iter().enumerate() {
        let got = to_rational(table.get(i + 1).ok_or("missing table entry")?);
        ensure(&got == b, || format!("B_{} disagrees with recursion", i + 1))?;
    }
    for (i, (num, den)) in ratio_by_recursion(20).into_iter().enumerate() {
        let n = i + 1;
        let (gn, gd) = lib(num_denom(n))?;
        ensure(gn == num && gd == den, || format!("Num/Denom(B_{n}/{}) differs", 2 * n))?;
    }
    Ok("B_1..B_30 through z^60; Num/Denom(B_n/2n) for n <= 20".into())
}

fn eigenvalue_suite() -> Result<String, String> {
    let oracle = bernoulli_by_recursion(6);
    let mut count = 0;
    for p in [3u64, 5, 7] {
        let k = lib(choose_k(p))?;
        for n in 1..=6usize {
            let got = lib(rk_eigenvalue(p, k, n))?;
            let power: BigInt = Pow::pow(BigInt::from(k), 2 * n as u32) - BigInt::one();
            let sign = if n % 2 == 1 { 1 } else { -1 };
            let expected = BigRational::from_integer(power * sign) * &oracle[n - 1]
                / BigRational::from_integer(BigInt::from(2 * n));
            ensure(to_rational(&got) == expected, || {
                format!("p={p} k={k} n={n}: got {got}, expected {expected}")
            })?;
            ensure(lib(vp(&got, p))?.is_p_local(), || {
                format!("p={p} k={k} n={n}: {got} not p-local")
            })?;
            count += 1;
        }
    }
    let worked = lib(rk_eigenvalue(3, 5, 1))?;
    ensure(worked == ExactFraction::from(2), || format!("(3,5,1) gave {worked}"))?;
    Ok(format!("{count} eigenvalues exact and p-local; (p=3, k=5, n=1) -> 2"))
}

fn denominator_suite() -> Result<String, String> {
    let dens = ratio_by_recursion(20);
    let mut rows = 0;
    let cases: Vec<(u64, u64)> = [3u64, 5, 7, 11]
        .iter()
        .map(|&p| (p, choose_k(p).unwrap()))
        .chain([(2, 3)])
        .collect();
    for (p, k) in cases {
        for n in 1..=20usize {
            let chk = lib(denominator_valuation_check_with(p, n, k))?;
            let power: BigInt = Pow::pow(BigInt::from(k), 2 * n as u32) - BigInt::one();
            let den = if p == 2 {
                dens[n - 1].1.clone() * 2
            } else {
                dens[n - 1].1.clone()
            };
            let (l, r) = (valuation(&power, p), valuation(&den, p));
            ensure(l == r, || format!("p={p} k={k} n={n}: {l} != {r}"))?;
            ensure(
                chk.pass
                    && chk.lhs == Valuation::Finite(l as i64)
                    && chk.rhs == Valuation::Finite(r as i64),
                || format!("library check disagrees at p={p} n={n}"),
            )?;
            rows += 1;
        }
    }
    Ok(format!("{rows} valuation equalities (p = 2 against 2 Denom)"))
}

fn polynomial_identity_suite() -> Result<String, String> {
    let mut checks = 0;
    for k in 2..=7u64 {
        for n in 0..=12usize {
            ensure(lib(r_polynomial_identity(k, n))?, || {
                format!("polynomial identity fails for k={k}, N={n}")
            })?;
            checks += 1;
        }
    }
    let sums: [&[i64]; 7] = [&[1], &[-1], &[2], &[1, 1], &[1, -1, 2], &[-2, 3, 0], &[3, 3, -1, 2]];
    for k in 2..=7u64 {
        for n in [3usize, 8, 12] {
            for s in sums {
                ensure(lib(rho_defining_relation(k, s, n))?, || {
                    format!("rho relation fails for k={k}, N={n}, exponents {s:?}")
                })?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} exact identities, k <= 7, N <= 12"))
}

fn artin_hasse_suite() -> Result<String, String> {
    let mut thetas = 0;
    for p in [2u64, 3, 5] {
        for t in 0..=3u32 {
            for n in 1..=10usize {
                for x in augmented_family(n) {
                    match theta(p, t, &x) {
                        Ok(_) => thetas += 1,
                        Err(Error::IntegralityViolation { .. }) => {
                            return Err(format!("theta^({p}^{t}) not p-integral at N={n}"))
                        }
                        Err(e) => return Err(e.to_string()),
                    }
                }
            }
        }
    }
    let mut signs = std::collections::BTreeSet::new();
    for p in [2u64, 3, 5] {
        for n in [1usize, 4, 8] {
            for x in augmented_family(n) {
                match lib(artin_hasse_vs_log_display(p, &x))? {
                    SignComparison::Mismatch => {
                        return Err(format!("L_(p) not a signed log form, p={p} N={n}"))
                    }
                    SignComparison::BothZero => {}
                    c => {
                        signs.insert(c.sign().unwrap());
                    }
                }
            }
        }
    }
    ensure(signs.len() == 1, || format!("sign not constant: {signs:?}"))?;
    let sign = *signs.iter().next().unwrap();
    let mut sum_form_holds = false;
    for p in [2u64, 3, 5] {
        for n in 1..=6usize {
            let s = lib(double_loop_scalar(p, n, n))?;
            let expected = ExactFraction::one() - ExactFraction::from(BigInt::from(p).pow(n as u32));
            ensure(s.scalar == expected, || {
                format!("l_(p) scalar at p={p} n={n} is {}, not {expected}", s.scalar)
            })?;
            ensure(s.congruent_to_one && s.p_local_unit, || {
                format!("l_(p) scalar at p={p} n={n} not a unit = 1 mod p")
            })?;
            let f = conjugate_minus_one(n);
            let d = lib(double_loop_sign(p, &f))?;
            ensure(d.matches_difference, || format!("l_(p) != f - psi^p f at p={p}"))?;
            sum_form_holds |= d.matches_sum;
        }
    }
    Ok(format!(
        "{thetas} theta evaluations integral; L_(p)(1-x) = {} (psi^p/p - 1) log(1-x) \
         for every input; l_(p) scalar 1 - p^n = 1 mod p; sum form f + psi^p f {}",
        if sign < 0 { "-1 x" } else { "+1 x" },
        if sum_form_holds { "also holds" } else { "does not hold (reported discrepancy)" }
    ))
}

fn akita_suite() -> Result<String, String> {
    for p in [3u64, 5, 7, 11, 13] {
        let m = 2 * p - 1;
        let cert = lib(akita_counterexample(p))?;
        // <s_m, a_m> = s_m(L-bar - 1), read off the Chern character.
        let duality = lib(s_eval(m as usize, &conjugate_minus_one(m as usize)))?;
        let duality = Residue::from_bigint(duality.numer(), p);
        let lead = q_on_bu(2, 1, p).coefficient;
        let expected = lead.mul(&duality);
        ensure(expected == Residue::new(-1, p), || format!("p={p}: oracle {expected}"))?;
        ensure(cert.kappa_bar_pairing == expected, || {
            format!("p={p}: pairing {} != {expected}", cert.kappa_bar_pairing)
        })?;
        ensure(cert.kappa_pairing.is_zero(), || format!("p={p}: kappa side nonzero"))?;
        ensure(cert.verdict == "conjecture fails mod p", || {
            format!("p={p}: verdict {:?}", cert.verdict)
        })?;
        let (num, _) = lib(num_denom(p as usize))?;
        ensure(
            (num % BigInt::from(p)) != BigInt::zero() && cert.numerator_is_p_unit,
            || format!("p={p}: numerator not a unit"),
        )?;
    }
    Ok("<s_(2p-1), Q^2(a_1)> = -1 mod p, kappa side 0, p in {3,5,7,11,13}".into())
}

fn bockstein_suite() -> Result<String, String> {
    let mut rows = 0;
    for p in [3u64, 5, 7] {
        for g in [2u64, 4] {
            let bound = 2 * g * p * p * p;
            for kind in [ModelKind::Type1, ModelKind::Type2] {
                let model = lib(build_model(kind, p, g, bound))?;
                let rep = lib(verify_closed_form_pages(&model, 3))?;
                if let Some(bad) = rep.mismatches().next() {
                    return Err(format!("{kind} p={p} deg={g}: {bad:?}"));
                }
                ensure(rep.pass, || format!("{kind} p={p} deg={g}: {rep:?}"))?;
                rows += rep.rows.len();
                if kind == ModelKind::Type2 {
                    let pages = lib(compute_page(&model, 3))?;
                    ensure(
                        pages[1..].iter().all(|pg| pg.total_dim() == 1 && pg.dim(0) == 1),
                        || format!("TYPE2 p={p} deg={g} does not collapse"),
                    )?;
                }
            }
        }
    }
    Ok(format!("{rows} (page, degree) dimensions match, pages E^1..E^4"))
}

fn run_property<S: proptest::strategy::Strategy>(
    name: &str,
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), proptest::test_runner::TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        proptest::test_runner::TestRng::deterministic_rng(
            proptest::test_runner::RngAlgorithm::ChaCha,
        ),
    );
    runner
        .run(&strategy, test)
        .map_err(|e| format!("{name}: {e}"))
}

fn property_suite() -> Result<String, String> {
    use proptest::{prop_assert, prop_assert_eq};
    run_property("ring axioms", 48, class_triple(), |(a, b, c)| {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(&ab, &b.mul(&a).unwrap());
        prop_assert_eq!(
            ab.mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            ab.add(&a.mul(&c).unwrap()).unwrap()
        );
        let one = KClass::one(a.truncation());
        prop_assert_eq!(a.mul(&one).unwrap(), a.clone());
        prop_assert!(a.sub(&a).unwrap().is_zero());
        Ok(())
    })?;
    run_property("psi laws", 48, (class_triple(), 1i64..=5, 1i64..=5), |((a, b, _), j, k)| {
        prop_assert_eq!(psi(k, &a.mul(&b).unwrap()), psi(k, &a).mul(&psi(k, &b)).unwrap());
        prop_assert_eq!(psi(k, &a.add(&b).unwrap()), psi(k, &a).add(&psi(k, &b)).unwrap());
        prop_assert_eq!(psi(j, &psi(k, &a)), psi(j * k, &a));
        Ok(())
    })?;
    run_property("ch compatibility", 48, (class_triple(), 1i64..=5), |((a, b, _), k)| {
        prop_assert_eq!(ch(&a.mul(&b).unwrap()), ch(&a).mul(&ch(&b)).unwrap());
        prop_assert_eq!(ch(&psi(k, &a)), psi_h(k, &ch(&a)));
        Ok(())
    })?;
    let log = lib(bh_log_identity_check(30))?;
    ensure(log.pass, || format!("log bh differs at {:?}", log.first_mismatch))?;
    for k in 2..=5u64 {
        let r = lib(bh_psi_identity_check(k, 30))?;
        ensure(r.pass, || format!("psi_H bh relation k={k} differs at {:?}", r.first_mismatch))?;
    }
    let mut pages = 0;
    for p in [3u64, 5, 7] {
        for g in [2u64, 4] {
            for kind in [ModelKind::Type1, ModelKind::Type2] {
                let model = lib(build_model(kind, p, g, 2 * g * p * p * p))?;
                for page in lib(compute_page(&model, 3))? {
                    ensure(page.d_squared_zero(p), || {
                        format!("d d != 0 on {kind} p={p} deg={g} E^{}", page.page_index)
                    })?;
                    pages += 1;
                }
            }
        }
    }
    Ok(format!(
        "ring, psi and ch laws on 48 cases each (N <= 12); bh series through x^30; d d = 0 on {pages} pages"
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, Check); 8] = [
        ("Bernoulli suite", bernoulli_suite),
        ("r^k eigenvalue", eigenvalue_suite),
        ("denominator valuations", denominator_suite),
        ("r^k polynomial and rho^k relations", polynomial_identity_suite),
        ("Artin-Hasse suite", artin_hasse_suite),
        ("Akita counterexample", akita_suite),
        ("Bockstein pages", bockstein_suite),
        ("property suites", property_suite),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(d) if elapsed > BUDGET => Err(format!("{d}; exceeded {BUDGET:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!(
                "criterion {} [{name}]: PASS ({detail}; {} ms)",
                i + 1,
                elapsed.as_millis()
            ),
            Err(detail) => {
                failed += 1;
                println!(
                    "criterion {} [{name}]: FAIL ({detail}; {} ms)",
                    i + 1,
                    elapsed.as_millis()
                )
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
