use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow};
use serde::Serialize;

use super::bernoulli::num_denom;
use super::valuation::{ensure_prime, vp_int, Valuation};
use crate::error::{Error, Result};

/// Multiplicative order of `a` modulo `m`, or `None` if `gcd(a, m) != 1`.
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if a.gcd(&m) != 1 {
        return None;
    }
    let a = a % m;
    let mut x = a;
    let mut ord = 1;
    while x != 1 {
        x = (x as u128 * a as u128 % m as u128) as u64;
        ord += 1;
    }
    Some(ord)
}

/// The Adams index used for the prime `p`.
///
/// For odd `p` this is the smallest odd `k >= 3` generating `(Z/p^2)^*`;
/// for `p = 2` it is `3` (any `k = ±3 mod 8` works). Oddness keeps
/// `(k-1)/2` integral.
pub fn choose_k(p: u64) -> Result<u64> {
    ensure_prime(p)?;
    if p == 2 {
        return Ok(3);
    }
    let modulus = p * p;
    let group_order = p * (p - 1);
    Ok((3..)
        .step_by(2)
        .find(|&k| multiplicative_order(k, modulus) == Some(group_order))
        .expect("(Z/p^2)^* is cyclic for odd p"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValuationCheck {
    pub prime: u64,
    pub n: usize,
    pub k: u64,
    /// `v_p(k^{2n} - 1)`
    pub lhs: Valuation,
    /// `v_p(Denom(B_n/2n))`, or `v_2(2 Denom(B_n/2n))` when `p = 2`
    pub rhs: Valuation,
    pub pass: bool,
}

/// `v_p(k^{2n} - 1)` against `v_p(Denom(B_n/2n))` with `k = choose_k(p)`.
pub fn denominator_valuation_check(p: u64, n: usize) -> Result<ValuationCheck> {
    let k = choose_k(p)?;
    denominator_valuation_check_with(p, n, k)
}

/// Same as [`denominator_valuation_check`] for a caller-chosen `k`.
pub fn denominator_valuation_check_with(p: u64, n: usize, k: u64) -> Result<ValuationCheck> {
    ensure_prime(p)?;
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    if k % p == 0 {
        return Err(Error::Domain(format!("k = {k} is not prime to p = {p}")));
    }
    let power: BigInt = Pow::pow(BigInt::from(k), 2 * n as u32) - BigInt::one();
    let (_, denom) = num_denom(n)?;
    let target = if p == 2 { denom * 2 } else { denom };
    let lhs = vp_int(&power, p);
    let rhs = vp_int(&target, p);
    Ok(ValuationCheck {
        prime: p,
        n,
        k,
        lhs,
        rhs,
        pass: lhs == rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force order by listing powers.
    fn order_by_listing(a: u64, m: u64) -> usize {
        let mut seen = vec![1u64];
        let mut x = a % m;
        while x != 1 {
            seen.push(x);
            x = x * a % m;
        }
        seen.len()
    }

    #[test]
    fn orders_against_listing() {
        assert_eq!(order_by_listing(5, 9), 6);
        assert_eq!(order_by_listing(3, 25), 20);
        assert_eq!(multiplicative_order(5, 9), Some(6));
        assert_eq!(multiplicative_order(3, 25), Some(20));
        assert_eq!(multiplicative_order(2, 9), Some(6));
        assert_eq!(multiplicative_order(3, 9), None);
    }

    #[test]
    fn choose_k_examples() {
        assert_eq!(choose_k(3).unwrap(), 5);
        assert_eq!(choose_k(5).unwrap(), 3);
        assert_eq!(choose_k(2).unwrap(), 3);
        assert_eq!(choose_k(2).unwrap() % 8, 3);
        assert!(choose_k(9).is_err());
    }

    #[test]
    fn choose_k_is_smallest_odd_generator() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
            let k = choose_k(p).unwrap();
            assert_eq!(k % 2, 1);
            let m = p * p;
            assert_eq!(order_by_listing(k, m) as u64, p * (p - 1));
            for smaller in (3..k).step_by(2) {
                if smaller % p != 0 {
                    assert_ne!(order_by_listing(smaller, m) as u64, p * (p - 1));
                }
            }
        }
    }

    #[test]
    fn valuation_check_examples() {
        let c = denominator_valuation_check(5, 2).unwrap();
        assert_eq!((c.k, c.lhs, c.rhs, c.pass), (3, Valuation::Finite(1), Valuation::Finite(1), true));
        let c = denominator_valuation_check(3, 1).unwrap();
        assert_eq!((c.k, c.lhs, c.rhs, c.pass), (5, Valuation::Finite(1), Valuation::Finite(1), true));
        let c = denominator_valuation_check(2, 1).unwrap();
        assert_eq!((c.k, c.lhs, c.rhs, c.pass), (3, Valuation::Finite(3), Valuation::Finite(3), true));
    }

    #[test]
    fn non_generator_can_fail() {
        // 8 = -1 mod 9 has order 2, so v_3(8^2 - 1) = v_3(63) = 2 but Denom(B_1/2) = 12.
        let c = denominator_valuation_check_with(3, 1, 8).unwrap();
        assert!(!c.pass);
    }

    #[test]
    fn odd_primes_small_n() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
            for n in 1..=20 {
                assert!(denominator_valuation_check(p, n).unwrap().pass, "p={p} n={n}");
            }
        }
    }
}
