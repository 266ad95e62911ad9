//! The operations `theta^(p^t)`, the Artin-Hasse logarithm
//!
//! ```text
//! L_(p)(1 - x) = - sum_{(n,p)=1} (1/n) sum_{t>=0} theta^(p^t)(x^n)
//! theta^(p^t)(x) = (x^(p^t) - psi^p(x^(p^(t-1)))) / p^t,   theta^1(x) = x
//! ```
//!
//! and its double loop `l_(p)`, defined by `Phi(l_(p)(f)) = L_(p)(1 + Phi(f))`
//! where `Phi` is multiplication with the Bott class. Everything is
//! evaluated literally from these definitions; the sums are finite because
//! the inputs are nilpotent.

use num_bigint::BigInt;
use num_traits::{Pow, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{ensure_prime, ExactFraction};
use crate::polyring::{series, suspend, DomainClaim, KClass, SuspensionClass};

/// A non-unital ring with Adams operations and nilpotent elements, in which
/// the Artin-Hasse logarithm can be evaluated.
pub trait AdamsAlgebra: Clone + Sized {
    fn add(&self, other: &Self) -> Result<Self>;
    fn sub(&self, other: &Self) -> Result<Self>;
    fn mul(&self, other: &Self) -> Result<Self>;
    fn scalar_mul(&self, s: &ExactFraction) -> Result<Self>;
    fn psi(&self, k: i64) -> Result<Self>;
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn claim(&self) -> DomainClaim;
    fn with_claim(&self, claim: DomainClaim) -> Result<Self>;
    /// Rational coefficients that determine the element.
    fn coefficients(&self) -> &[ExactFraction];

    fn pow(&self, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("zeroth power in a non-unital ring".into()));
        }
        let mut acc = self.clone();
        let mut base = self.clone();
        let mut n = n - 1;
        while n > 0 && !acc.is_zero() {
            if n & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }
}

impl AdamsAlgebra for KClass {
    fn add(&self, other: &Self) -> Result<Self> {
        KClass::add(self, other)
    }
    fn sub(&self, other: &Self) -> Result<Self> {
        KClass::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Result<Self> {
        KClass::mul(self, other)
    }
    fn scalar_mul(&self, s: &ExactFraction) -> Result<Self> {
        KClass::scalar_mul(self, s)
    }
    fn psi(&self, k: i64) -> Result<Self> {
        Ok(self.adams(k))
    }
    fn is_zero(&self) -> bool {
        KClass::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        KClass::zero(self.truncation())
    }
    fn claim(&self) -> DomainClaim {
        KClass::claim(self)
    }
    fn with_claim(&self, claim: DomainClaim) -> Result<Self> {
        KClass::with_claim(self, claim)
    }
    fn coefficients(&self) -> &[ExactFraction] {
        self.coeffs()
    }
}

impl AdamsAlgebra for SuspensionClass {
    fn add(&self, other: &Self) -> Result<Self> {
        SuspensionClass::add(self, other)
    }
    fn sub(&self, other: &Self) -> Result<Self> {
        SuspensionClass::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Result<Self> {
        SuspensionClass::mul(self, other)
    }
    fn scalar_mul(&self, s: &ExactFraction) -> Result<Self> {
        SuspensionClass::scalar_mul(self, s)
    }
    fn psi(&self, k: i64) -> Result<Self> {
        SuspensionClass::psi(self, k)
    }
    fn is_zero(&self) -> bool {
        SuspensionClass::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        SuspensionClass::zero(self.truncation())
    }
    fn claim(&self) -> DomainClaim {
        SuspensionClass::claim(self)
    }
    fn with_claim(&self, claim: DomainClaim) -> Result<Self> {
        SuspensionClass::with_claim(self, claim)
    }
    fn coefficients(&self) -> &[ExactFraction] {
        self.base().coeffs()
    }
}

fn check_p_local_input<A: AdamsAlgebra>(p: u64, x: &A) -> Result<()> {
    ensure_prime(p)?;
    match x.claim() {
        DomainClaim::Integral => Ok(()),
        DomainClaim::PLocal(q) if q == p => Ok(()),
        other => Err(Error::Domain(format!(
            "input must be integral or {}-local, claim is {other}",
            p
        ))),
    }
}

fn p_power(p: u64, t: u32) -> ExactFraction {
    ExactFraction::from(Pow::pow(BigInt::from(p), t))
}

/// `theta^(p^t)` without input checks; the result is verified `p`-integral
/// and carries the claim `P_LOCAL(p)`.
fn theta_unchecked<A: AdamsAlgebra>(p: u64, t: u32, x: &A) -> Result<A> {
    if t == 0 {
        return x.with_claim(DomainClaim::PLocal(p));
    }
    let x = x.with_claim(DomainClaim::Rational)?;
    let lower = x.pow(Pow::pow(p, t - 1))?;
    if lower.is_zero() {
        return Ok(x.zero_like().with_claim(DomainClaim::PLocal(p))?);
    }
    let top = lower.pow(p)?;
    let diff = top.sub(&lower.psi(p as i64)?)?;
    let out = diff.scalar_mul(&p_power(p, t).recip()?)?;
    let claim = DomainClaim::PLocal(p);
    if let Some(index) = out.coefficients().iter().position(|c| !claim.admits(c)) {
        return Err(Error::IntegralityViolation {
            prime: p,
            exponent: t,
            index,
            value: out.coefficients()[index].clone(),
        });
    }
    out.with_claim(claim)
}

/// `theta^(p^t)(f)` for `f` in the augmentation ideal with integral or
/// `p`-local coefficients. Fails with [`Error::IntegralityViolation`] if the
/// division by `p^t` is not exact in `Z_(p)`.
pub fn theta(p: u64, t: u32, f: &KClass) -> Result<KClass> {
    check_p_local_input(p, f)?;
    if !f.in_augmentation_ideal() {
        return Err(Error::Domain("theta needs an element of the augmentation ideal".into()));
    }
    theta_unchecked(p, t, f)
}

/// `L_(p)(1 - x)` evaluated in any [`AdamsAlgebra`] with nilpotent `x`.
pub fn artin_hasse_log_in<A: AdamsAlgebra>(p: u64, x: &A) -> Result<A> {
    check_p_local_input(p, x)?;
    let claim = DomainClaim::PLocal(p);
    let mut total = x.zero_like().with_claim(claim)?;
    let mut power = x.with_claim(claim)?;
    let mut n: u64 = 1;
    while !power.is_zero() {
        if n % p != 0 {
            let mut inner = power.zero_like().with_claim(claim)?;
            let mut t = 0;
            loop {
                // theta^(p^t)(y) vanishes once y^(p^(t-1)) does
                if t > 0 && power.pow(Pow::pow(p, t - 1))?.is_zero() {
                    break;
                }
                inner = inner.add(&theta_unchecked(p, t, &power)?)?;
                t += 1;
            }
            total = total.add(&inner.scalar_mul(&ExactFraction::new(1, n as i64)?)?)?;
        }
        n += 1;
        power = power.mul(x)?;
    }
    Ok(total.scalar_mul(&ExactFraction::from(-1))?)
}

/// `L_(p)(1 - x)` for `x` in the augmentation ideal of `K(CP^N)`.
pub fn artin_hasse_log(p: u64, x: &KClass) -> Result<KClass> {
    if !x.in_augmentation_ideal() {
        return Err(Error::Domain("x must lie in the augmentation ideal".into()));
    }
    artin_hasse_log_in(p, x)
}

/// The double loop `l_(p)`: the class `g` with
/// `g . lambda = L_(p)(1 + f . lambda)`, computed in the square-zero model.
pub fn l_double_loop(p: u64, f: &KClass) -> Result<KClass> {
    if !f.in_augmentation_ideal() {
        return Err(Error::Domain("f must lie in the augmentation ideal".into()));
    }
    // 1 + f lambda = 1 - x with x = -f lambda
    let x = suspend(f).negate();
    let image = artin_hasse_log_in(p, &x)?;
    Ok(image.base().clone())
}

/// `(1 - psi^p/p) log(1 - x)` with `log(1 - x) = -sum x^m/m`, by direct
/// series substitution. This is what the theta-sum telescopes to over `Q`.
pub fn rational_log_form(p: u64, x: &KClass) -> Result<KClass> {
    ensure_prime(p)?;
    if !x.in_augmentation_ideal() {
        return Err(Error::Domain("x must lie in the augmentation ideal".into()));
    }
    let n = x.truncation();
    let log_coeffs: Vec<ExactFraction> = (0..=n)
        .map(|m| match m {
            0 => ExactFraction::zero(),
            _ => ExactFraction::new(-1, m as i64).expect("nonzero"),
        })
        .collect();
    let log = KClass::new(series::compose(&log_coeffs, x.coeffs()), DomainClaim::Rational)?;
    let shifted = log.adams(p as i64).scalar_mul(&ExactFraction::new(1, p as i64)?)?;
    log.sub(&shifted)
}

/// How a computed class compares with a reference closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SignComparison {
    /// computed = reference (and nonzero)
    Same,
    /// computed = -reference (and nonzero)
    Opposite,
    /// both sides vanish
    BothZero,
    /// not equal up to sign
    Mismatch,
}

impl SignComparison {
    pub fn compare(computed: &[ExactFraction], reference: &[ExactFraction]) -> Self {
        let zero = |v: &[ExactFraction]| v.iter().all(|c| c.is_zero());
        if zero(computed) && zero(reference) {
            SignComparison::BothZero
        } else if computed == reference {
            SignComparison::Same
        } else if computed.iter().zip(reference).all(|(a, b)| a == &-b) {
            SignComparison::Opposite
        } else {
            SignComparison::Mismatch
        }
    }

    pub fn sign(self) -> Option<i8> {
        match self {
            SignComparison::Same => Some(1),
            SignComparison::Opposite => Some(-1),
            _ => None,
        }
    }
}

/// Compares `L_(p)(1 - x)` with `(psi^p/p - 1) log(1 - x)`.
pub fn artin_hasse_vs_log_display(p: u64, x: &KClass) -> Result<SignComparison> {
    let computed = artin_hasse_log(p, x)?;
    let display = rational_log_form(p, x)?.negate();
    Ok(SignComparison::compare(computed.coeffs(), display.coeffs()))
}

/// Compares `l_(p)(f)` with `f + psi^p(f)` and with `f - psi^p(f)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleLoopSign {
    pub matches_sum: bool,
    pub matches_difference: bool,
}

pub fn double_loop_sign(p: u64, f: &KClass) -> Result<DoubleLoopSign> {
    let l = l_double_loop(p, f)?;
    let psi = f.adams(p as i64);
    let sum = f.add(&psi)?;
    let diff = f.sub(&psi)?;
    Ok(DoubleLoopSign {
        matches_sum: l.coeffs() == sum.coeffs(),
        matches_difference: l.coeffs() == diff.coeffs(),
    })
}

/// Counts coefficient positions where `x` is not `p`-integral.
pub fn count_non_p_local(p: u64, x: &KClass) -> usize {
    let p = BigInt::from(p);
    x.coeffs()
        .iter()
        .filter(|c| (c.denom() % &p).is_zero())
        .count()
}
