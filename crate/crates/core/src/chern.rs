//! Chern character into truncated cohomology, the integral classes
//! `s_n = n! ch_n`, the class `bh` of a line and its logarithm, and the
//! eigenvalue of `r^k` on odd-degree primitives.
//!
//! The eigenvalue is read off from a single test class. `r^k` is additive,
//! so it carries primitives to primitives, and the primitives of
//! `H^(4n-2)(BU; Q)` are spanned by `s_(2n-1)` alone. Evaluating on
//! `L-bar - 1` over `CP^N`, where `s_(2n-1)(L-bar - 1) = -1 != 0`, therefore
//! determines the scalar. This is the `CP^N` version of evaluating on the
//! sphere `S^(4n-2)`, where `ch` is an isomorphism onto integral cohomology.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{bernoulli, factorial, vp, BernoulliTable, ExactFraction};
use crate::kops::{l_double_loop, r_virtual_conjugate_minus_one};
use crate::polyring::{default_truncation, line_power, series, CohClass, KClass};

/// A value of `s_n` against `e^n`, i.e. in cohomological degree `2n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedEvaluation {
    pub degree_index: usize,
    pub value: ExactFraction,
}

/// The Chern character: `u -> exp(e) - 1`, truncated at `e^N`.
pub fn ch(f: &KClass) -> CohClass {
    let n = f.truncation();
    let g = series::exp_minus_one(1, n + 1);
    CohClass::new(series::compose(f.coeffs(), &g)).expect("nonempty")
}

/// `s_m(f) = m! ch_m(f)`.
pub fn s_eval(m: usize, f: &KClass) -> Result<ExactFraction> {
    if m > f.truncation() {
        return Err(Error::Domain(format!(
            "s_{m} needs truncation at least {m}, class has {}",
            f.truncation()
        )));
    }
    Ok(ch(f).coeff(m) * ExactFraction::from(factorial(m as u32)))
}

/// All `s_n(f)` for `n <= N`.
pub fn graded_evaluations(f: &KClass) -> Vec<GradedEvaluation> {
    let c = ch(f);
    (0..=f.truncation())
        .map(|n| GradedEvaluation {
            degree_index: n,
            value: c.coeff(n) * ExactFraction::from(factorial(n as u32)),
        })
        .collect()
}

/// `psi^k_H`: multiplies the degree-`2n` part by `k^n`.
pub fn psi_h(k: i64, c: &CohClass) -> CohClass {
    let k = ExactFraction::from(k);
    let coeffs = c
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, x)| x * &k.pow(n as i32))
        .collect();
    CohClass::new(coeffs).expect("nonempty")
}

/// `bh(L) = (e^x - 1)/x` for a line with first Chern class `x`, truncated at
/// `x^N`.
pub fn bh_line(truncation: usize) -> CohClass {
    let coeffs = (0..=truncation)
        .map(|i| ExactFraction::inv_factorial(i as u32 + 1))
        .collect();
    CohClass::new(coeffs).expect("nonempty")
}

/// `x/2 + sum_{n>=1} (-1)^(n-1) (B_n/2n) x^(2n)/(2n)!` through `x^order`.
pub fn bernoulli_log_series(order: usize) -> Result<CohClass> {
    let mut coeffs = vec![ExactFraction::zero(); order + 1];
    if order >= 1 {
        coeffs[1] = ExactFraction::new(1, 2)?;
    }
    if order >= 2 {
        let table = BernoulliTable::new(order / 2)?;
        for (i, b) in table.values().iter().enumerate() {
            let n = i + 1;
            let c = b / &ExactFraction::from(2 * n as i64)
                * ExactFraction::inv_factorial(2 * n as u32);
            coeffs[2 * n] = if n % 2 == 1 { c } else { -c };
        }
    }
    CohClass::new(coeffs)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesCheck {
    pub order: usize,
    pub pass: bool,
    /// First power of `x` where the two sides differ, with both values.
    pub first_mismatch: Option<(usize, ExactFraction, ExactFraction)>,
}

fn compare_series(order: usize, lhs: &CohClass, rhs: &CohClass) -> SeriesCheck {
    let first_mismatch = (0..=order)
        .find(|&i| lhs.coeff(i) != rhs.coeff(i))
        .map(|i| (i, lhs.coeff(i), rhs.coeff(i)));
    SeriesCheck {
        order,
        pass: first_mismatch.is_none(),
        first_mismatch,
    }
}

/// `log((e^x - 1)/x)` against the Bernoulli series through `x^order`.
pub fn bh_log_identity_check(order: usize) -> Result<SeriesCheck> {
    if order == 0 {
        return Err(Error::Domain("order must be positive".into()));
    }
    let lhs = bh_line(order).log()?;
    let rhs = bernoulli_log_series(order)?;
    Ok(compare_series(order, &lhs, &rhs))
}

/// `psi^k_H(bh(L)) = ch(rho^k(L)) bh(L)` through `x^order`.
pub fn bh_psi_identity_check(k: u64, order: usize) -> Result<SeriesCheck> {
    let bh = bh_line(order);
    let lhs = psi_h(k as i64, &bh);
    let rho = crate::kops::rho_line(k, 1, order)?;
    let rhs = ch(&rho).mul(&bh)?;
    Ok(compare_series(order, &lhs, &rhs))
}

/// `(-1)^(n-1) (k^(2n) - 1) B_n / 2n`
pub fn rk_eigenvalue_closed_form(k: u64, n: usize) -> Result<ExactFraction> {
    let b = bernoulli(n)?;
    let power: BigInt = Pow::pow(BigInt::from(k), 2 * n as u32) - BigInt::one();
    let v = ExactFraction::from(power) * b / ExactFraction::from(2 * n as i64);
    Ok(if n % 2 == 1 { v } else { -v })
}

fn check_eigen_args(p: u64, k: u64, n: usize) -> Result<()> {
    crate::exact::ensure_prime(p)?;
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    if k.gcd(&p) != 1 {
        return Err(Error::Domain(format!("k = {k} is not prime to p = {p}")));
    }
    if k % 2 == 0 {
        return Err(Error::Domain(format!("k = {k} must be odd")));
    }
    Ok(())
}

/// Eigenvalue of `(r^k)^*` on `Prim H^(4n-2)`, computed as
/// `s_(2n-1)(r^k(L-bar) - (k-1)/2) / s_(2n-1)(L-bar - 1)` at the default
/// truncation `2n + 2`.
pub fn rk_eigenvalue(p: u64, k: u64, n: usize) -> Result<ExactFraction> {
    rk_eigenvalue_at(p, k, n, default_truncation(n))
}

/// [`rk_eigenvalue`] at an explicit truncation `N >= 2n - 1`.
pub fn rk_eigenvalue_at(p: u64, k: u64, n: usize, truncation: usize) -> Result<ExactFraction> {
    check_eigen_args(p, k, n)?;
    let m = 2 * n - 1;
    let image = r_virtual_conjugate_minus_one(k, truncation)?;
    let test_class = conjugate_minus_one(truncation);
    let num = s_eval(m, &image)?;
    let den = s_eval(m, &test_class)?;
    Ok(num / den)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EigenvalueCheck {
    pub prime: u64,
    pub k: u64,
    pub n: usize,
    pub computed: ExactFraction,
    pub expected: ExactFraction,
    pub p_local: bool,
    pub pass: bool,
}

/// Computes the eigenvalue and checks it against the closed form and for
/// `p`-locality.
pub fn verify_rk_eigenvalue(p: u64, k: u64, n: usize) -> Result<EigenvalueCheck> {
    let computed = rk_eigenvalue(p, k, n)?;
    let expected = rk_eigenvalue_closed_form(k, n)?;
    let p_local = vp(&computed, p)?.is_p_local();
    Ok(EigenvalueCheck {
        prime: p,
        k,
        n,
        pass: computed == expected && p_local,
        computed,
        expected,
        p_local,
    })
}

/// `L-bar - 1`
pub fn conjugate_minus_one(truncation: usize) -> KClass {
    line_power(-1, truncation)
        .sub(&KClass::one(truncation))
        .expect("same truncation")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignShadow {
    pub n: usize,
    pub value: ExactFraction,
    pub expected: ExactFraction,
    pub pass: bool,
}

/// `s_n(L-bar - 1) = (-1)^n` for `n >= 1` (and `0` for `n = 0`): the
/// rational sign relating the two families of tautological classes, detected
/// on `CP^infinity`.
pub fn kappa_sign_shadow(n: usize, truncation: usize) -> Result<SignShadow> {
    let value = s_eval(n, &conjugate_minus_one(truncation))?;
    let expected = match n {
        0 => ExactFraction::zero(),
        _ if n % 2 == 0 => ExactFraction::one(),
        _ => ExactFraction::from(-1),
    };
    Ok(SignShadow {
        n,
        pass: value == expected,
        value,
        expected,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleLoopScalar {
    pub prime: u64,
    pub n: usize,
    /// `s_n(l_(p)(L-bar - 1)) / s_n(L-bar - 1)`
    pub scalar: ExactFraction,
    /// `1 - p^n`
    pub difference_form: ExactFraction,
    /// `1 + p^n`
    pub sum_form: ExactFraction,
    pub p_local_unit: bool,
    pub congruent_to_one: bool,
}

/// Scalar by which `l_(p)` acts on `s_n`, read off from `L-bar - 1`.
pub fn double_loop_scalar(p: u64, n: usize, truncation: usize) -> Result<DoubleLoopScalar> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    let f = conjugate_minus_one(truncation);
    let l = l_double_loop(p, &f)?;
    let scalar = s_eval(n, &l)? / s_eval(n, &f)?;
    let pn = ExactFraction::from(Pow::pow(BigInt::from(p), n as u32));
    let v = vp(&scalar, p)?;
    let congruent_to_one = {
        let diff = &scalar - &ExactFraction::one();
        vp(&diff, p)?.value >= crate::exact::Valuation::Finite(1)
    };
    Ok(DoubleLoopScalar {
        prime: p,
        n,
        p_local_unit: v.value == crate::exact::Valuation::Finite(0),
        congruent_to_one,
        difference_form: &ExactFraction::one() - &pn,
        sum_form: &ExactFraction::one() + &pn,
        scalar,
    })
}

/// `s_n(l_(p)(f)) = s_n(f) mod p`: `l_(p)` is the identity in mod `p`
/// cohomology.
pub fn double_loop_mod_p_identity(p: u64, n: usize, f: &KClass) -> Result<bool> {
    let l = l_double_loop(p, f)?;
    let diff = s_eval(n, &l)? - s_eval(n, f)?;
    Ok(vp(&diff, p)?.value >= crate::exact::Valuation::Finite(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kops::{psi, rho_line};

    fn q(n: i64, d: i64) -> ExactFraction {
        ExactFraction::new(n, d).unwrap()
    }

    #[test]
    fn ch_examples() {
        assert_eq!(ch(&KClass::one(4)), CohClass::one(4));
        assert_eq!(ch(&line_power(1, 5)), CohClass::exp(1, 5));
        let prod = line_power(1, 6).mul(&line_power(-1, 6)).unwrap();
        assert_eq!(ch(&prod), CohClass::one(6));
    }

    #[test]
    fn s_eval_examples() {
        let l = line_power(1, 6);
        for m in 0..=6 {
            assert_eq!(s_eval(m, &l).unwrap(), ExactFraction::one());
        }
        let f = conjugate_minus_one(6);
        for m in 1..=6 {
            let sign = if m % 2 == 0 { 1 } else { -1 };
            assert_eq!(s_eval(m, &f).unwrap(), ExactFraction::from(sign));
        }
        assert_eq!(s_eval(2, &line_power(2, 3)).unwrap(), ExactFraction::from(4));
        assert!(s_eval(4, &l.clone().with_claim(l.claim()).unwrap()).is_ok());
        assert!(matches!(s_eval(7, &l), Err(Error::Domain(_))));
    }

    #[test]
    fn graded_evaluations_products_vanish_in_degree_one() {
        let a = KClass::u(4);
        let prod = a.mul(&a).unwrap();
        assert!(graded_evaluations(&prod)[1].value.is_zero());
    }

    #[test]
    fn bh_log_examples() {
        let c = bh_log_identity_check(4).unwrap();
        assert!(c.pass);
        let lhs = bh_line(4).log().unwrap();
        assert_eq!(lhs.coeff(2), q(1, 24));
        assert!(bh_log_identity_check(2).unwrap().pass);
        assert!(bh_log_identity_check(30).unwrap().pass);
    }

    #[test]
    fn psi_h_examples() {
        let c = CohClass::new(vec![q(1, 1), q(1, 1), q(1, 1)]).unwrap();
        assert_eq!(psi_h(2, &c).coeffs(), &[q(1, 1), q(2, 1), q(4, 1)]);
        let l = line_power(1, 6);
        assert_eq!(ch(&psi(3, &l)), psi_h(3, &ch(&l)));
        assert!(bh_psi_identity_check(2, 10).unwrap().pass);
    }

    #[test]
    fn bh_relation_uses_rho() {
        let rho = rho_line(3, 1, 5).unwrap();
        let lhs = psi_h(3, &bh_line(5));
        assert_eq!(lhs, ch(&rho).mul(&bh_line(5)).unwrap());
    }

    #[test]
    fn eigenvalue_examples() {
        assert_eq!(rk_eigenvalue(3, 5, 1).unwrap(), ExactFraction::from(2));
        let v = rk_eigenvalue(7, 3, 1).unwrap();
        assert_eq!(v, q(2, 3));
        assert!(vp(&v, 7).unwrap().is_p_local());
        let v = rk_eigenvalue(3, 5, 2).unwrap();
        assert_eq!(v, q(-26, 5));
        assert!(vp(&v, 3).unwrap().is_p_local());
    }

    #[test]
    fn eigenvalue_argument_checks() {
        assert!(rk_eigenvalue(3, 3, 1).is_err());
        assert!(rk_eigenvalue(3, 4, 1).is_err());
        assert!(rk_eigenvalue(3, 5, 0).is_err());
    }

    #[test]
    fn kappa_sign_examples() {
        assert_eq!(kappa_sign_shadow(1, 3).unwrap().value, ExactFraction::from(-1));
        assert_eq!(kappa_sign_shadow(2, 3).unwrap().value, ExactFraction::one());
        let z = kappa_sign_shadow(0, 3).unwrap();
        assert!(z.pass && z.value.is_zero());
    }

    #[test]
    fn double_loop_scalar_is_difference_form() {
        let s = double_loop_scalar(3, 2, 4).unwrap();
        assert_eq!(s.scalar, ExactFraction::from(-8));
        assert_eq!(s.scalar, s.difference_form);
        assert!(s.p_local_unit && s.congruent_to_one);
    }
}
