//! Oracles and generators shared by the integration suites. Nothing here
//! calls into the library's own Bernoulli or valuation code.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use surfrr_core::polyring::line_power;
use surfrr_core::{DomainClaim, ExactFraction, KClass};

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `B_n` for `n = 1..=max` from `sum_{k=0}^{m} C(m+1, k) b_k = 0` (the
/// classical numbers `b_m`), with `B_n = (-1)^(n-1) b_(2n)`.
pub fn bernoulli_by_recursion(max: usize) -> Vec<BigRational> {
    let top = 2 * max;
    let mut b: Vec<BigRational> = vec![BigRational::one()];
    for m in 1..=top as u64 {
        let s: BigRational = (0..m)
            .map(|k| BigRational::from_integer(binomial(m + 1, k)) * &b[k as usize])
            .sum();
        b.push(-s / BigRational::from_integer(BigInt::from(m + 1)));
    }
    (1..=max)
        .map(|n| {
            let v = b[2 * n].clone();
            if n % 2 == 1 {
                v
            } else {
                -v
            }
        })
        .collect()
}

/// `B_n / 2n` in lowest terms.
pub fn ratio_by_recursion(max: usize) -> Vec<(BigInt, BigInt)> {
    bernoulli_by_recursion(max)
        .into_iter()
        .enumerate()
        .map(|(i, b)| {
            let r = b / BigRational::from_integer(BigInt::from(2 * (i + 1)));
            (r.numer().clone(), r.denom().clone())
        })
        .collect()
}

/// `v_p(n)` for `n != 0`.
pub fn valuation(n: &BigInt, p: u64) -> u32 {
    assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    while n.is_multiple_of(&p) {
        n /= &p;
        v += 1;
    }
    v
}

pub fn frac(n: i64, d: i64) -> ExactFraction {
    ExactFraction::new(n, d).unwrap()
}

pub fn coeff() -> impl Strategy<Value = ExactFraction> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| frac(n, d))
}

pub fn int_coeff() -> impl Strategy<Value = ExactFraction> {
    (-9i64..=9).prop_map(ExactFraction::from)
}

/// Three rational classes of one truncation `N <= 12`.
pub fn class_triple() -> impl Strategy<Value = (KClass, KClass, KClass)> {
    (1usize..=12).prop_flat_map(|n| {
        let v = || proptest::collection::vec(coeff(), n + 1);
        (v(), v(), v()).prop_map(|(a, b, c)| {
            let mk = |x| KClass::new(x, DomainClaim::Rational).unwrap();
            (mk(a), mk(b), mk(c))
        })
    })
}

/// An integral class in the augmentation ideal, `N <= 10`.
pub fn integral_augmented(max_n: usize) -> impl Strategy<Value = KClass> {
    (1usize..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(int_coeff(), n).prop_map(|tail| {
            let mut c = vec![ExactFraction::zero()];
            c.extend(tail);
            KClass::new(c, DomainClaim::Integral).unwrap()
        })
    })
}

/// Integral classes in the augmentation ideal used as fixed test inputs:
/// `L^a - 1`, powers and combinations of `u`.
pub fn augmented_family(n: usize) -> Vec<KClass> {
    let mut out: Vec<KClass> = [-3, -2, -1, 1, 2, 3]
        .iter()
        .map(|&a| line_power(a, n).sub(&KClass::one(n)).unwrap())
        .collect();
    out.push(KClass::u(n).negate());
    if n >= 2 {
        out.push(KClass::monomial(2, n));
        let mut c = vec![0i64; n + 1];
        c[1] = 1;
        c[2] = 2;
        if n >= 3 {
            c[3] = -3;
        }
        out.push(KClass::from_integers(&c).unwrap());
        let a = line_power(1, n).sub(&KClass::one(n)).unwrap();
        let b = line_power(2, n).sub(&KClass::one(n)).unwrap();
        out.push(a.mul(&b).unwrap());
    }
    out
}
