use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{ensure_prime, ExactFraction};
use crate::polyring::{line_power, DomainClaim, KClass, SphereProductClass};

/// The indices `k`, `p`, `t` of `psi^k`, `rho^k`, `r^k` and `theta^(p^t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OperationParams {
    pub k: u64,
    pub p: u64,
    pub t: u32,
}

impl OperationParams {
    /// `k >= 2`, `p` prime and `gcd(k, p) = 1`.
    pub fn new(k: u64, p: u64, t: u32) -> Result<Self> {
        ensure_prime(p)?;
        if k < 2 {
            return Err(Error::Domain(format!("k must be at least 2, got {k}")));
        }
        if k.gcd(&p) != 1 {
            return Err(Error::Domain(format!("k = {k} is not prime to p = {p}")));
        }
        Ok(OperationParams { k, p, t })
    }
}

/// Adams operation `psi^k`.
pub fn psi(k: i64, f: &KClass) -> KClass {
    f.adams(k)
}

/// The K-theory Thom class `1 - L^a` of the line `L^a`.
pub fn lambda_line(a: i64, truncation: usize) -> KClass {
    KClass::one(truncation)
        .sub(&line_power(a, truncation))
        .expect("same truncation")
}

fn check_k(k: u64) -> Result<()> {
    if k < 2 {
        return Err(Error::Domain(format!("k must be at least 2, got {k}")));
    }
    Ok(())
}

/// `1 + x + ... + x^(k-1)` for a line class `x`.
fn geometric_sum(x: &KClass, k: u64) -> KClass {
    let mut acc = KClass::zero(x.truncation());
    let mut term = KClass::one(x.truncation());
    for _ in 0..k {
        acc = acc.add(&term).expect("same truncation");
        term = term.mul(x).expect("same truncation");
    }
    acc
}

/// `rho^k(L^a) = (1 + L^a + ... + L^(a(k-1))) / k` over `Z[1/k]`.
pub fn rho_line(k: u64, a: i64, truncation: usize) -> Result<KClass> {
    check_k(k)?;
    geometric_sum(&line_power(a, truncation), k)
        .with_claim(DomainClaim::KInverted(k))?
        .scalar_mul(&ExactFraction::new(1, k)?)
}

/// `rho^k` of `L^(a_1) + ... + L^(a_m)`, the product of the line values.
pub fn rho_sum(k: u64, exponents: &[i64], truncation: usize) -> Result<KClass> {
    check_k(k)?;
    exponents.iter().try_fold(
        KClass::one(truncation).with_claim(DomainClaim::KInverted(k))?,
        |acc, &a| acc.mul(&rho_line(k, a, truncation)?),
    )
}

/// Checks `psi^k(lambda) = k^m rho^k lambda` for `lambda = prod (1 - L^a_i)`.
pub fn rho_defining_relation(k: u64, exponents: &[i64], truncation: usize) -> Result<bool> {
    let lambda = exponents
        .iter()
        .try_fold(KClass::one(truncation), |acc, &a| acc.mul(&lambda_line(a, truncation)))?;
    let lhs = psi(k as i64, &lambda);
    let scale = ExactFraction::from(k as i64).pow(exponents.len() as i32);
    let rhs = rho_sum(k, exponents, truncation)?
        .mul(&lambda)?
        .scalar_mul(&scale)?;
    Ok(lhs.coeffs() == rhs.coeffs())
}

/// `L^(k-2) + 2 L^(k-3) + ... + (k-2) L + (k-1)`
fn r_numerator(k: u64, truncation: usize) -> KClass {
    (1..k).fold(KClass::zero(truncation), |acc, j| {
        let term = line_power((k - 1 - j) as i64, truncation)
            .scalar_mul(&ExactFraction::from(j as i64))
            .expect("integral scalar");
        acc.add(&term).expect("same truncation")
    })
}

/// `r^k(L-bar)` as the rational function of `L`
/// `(L^(k-2) + 2 L^(k-3) + ... + (k-1)) / (1 + L + ... + L^(k-1))`,
/// with the denominator inverted over `Z[1/k]`.
pub fn r_line_conjugate(k: u64, truncation: usize) -> Result<KClass> {
    check_k(k)?;
    let claim = DomainClaim::KInverted(k);
    let num = r_numerator(k, truncation).with_claim(claim)?;
    let den = geometric_sum(&line_power(1, truncation), k).with_claim(claim)?;
    num.mul(&den.invert()?)
}

/// `r^k(L-bar) - (k-1)/2`, the image of the virtual class `L-bar - 1`
/// (`r^k` is additive and sends the trivial line to `(k-1)/2`). `k` odd.
pub fn r_virtual_conjugate_minus_one(k: u64, truncation: usize) -> Result<KClass> {
    if k % 2 == 0 {
        return Err(Error::Domain(format!("k = {k} must be odd so (k-1)/2 is integral")));
    }
    let shift = ExactFraction::from(-(((k - 1) / 2) as i64));
    r_line_conjugate(k, truncation)?.add_constant(&shift)
}

/// `(L - 1)(L^(k-2) + ... + (k-1)) = (1 + L + ... + L^(k-1)) - k`.
pub fn r_polynomial_identity(k: u64, truncation: usize) -> Result<bool> {
    check_k(k)?;
    let lhs = KClass::u(truncation).mul(&r_numerator(k, truncation))?;
    let rhs = geometric_sum(&line_power(1, truncation), k)
        .add_constant(&ExactFraction::from(-(k as i64)))?;
    Ok(lhs == rhs)
}

fn rho_sphere_line(k: u64, m: &SphereProductClass) -> Result<SphereProductClass> {
    let mut acc = SphereProductClass::from_base(&KClass::zero(m.truncation()));
    let mut term = SphereProductClass::from_base(&KClass::one(m.truncation()));
    for _ in 0..k {
        acc = acc.add(&term)?;
        term = term.mul(m)?;
    }
    acc.with_claim(DomainClaim::KInverted(k))?
        .scalar_mul(&ExactFraction::new(1, k)?)
}

/// `rho^k` of the suspended line `L^a . lambda = L^a L_1 - L^a`, computed as
/// `rho^k(L^a L_1) / rho^k(L^a)` in `K(X x S^2)`. The result has the form
/// `1 + r . lambda` with `r = r^k(L^a)`.
pub fn rho_of_suspended_line(k: u64, a: i64, truncation: usize) -> Result<SphereProductClass> {
    check_k(k)?;
    let line = SphereProductClass::from_base(&line_power(a, truncation));
    let twisted = line.mul(&SphereProductClass::hopf_line(truncation))?;
    rho_sphere_line(k, &twisted)?.mul(&rho_sphere_line(k, &line)?.invert()?)
}

/// The defining relation `psi^k(1 - M) = k rho^k(M) (1 - M)` for the line
/// `M = L^a L_1` on `X x S^2`.
pub fn sphere_line_defining_relation(k: u64, a: i64, truncation: usize) -> Result<bool> {
    check_k(k)?;
    let one = SphereProductClass::from_base(&KClass::one(truncation));
    let m = SphereProductClass::from_base(&line_power(a, truncation))
        .mul(&SphereProductClass::hopf_line(truncation))?;
    let lambda = one.sub(&m)?;
    let lhs = lambda.psi(k as i64)?;
    let rhs = rho_sphere_line(k, &m)?
        .mul(&lambda)?
        .scalar_mul(&ExactFraction::from(k as i64))?;
    Ok(lhs.base.coeffs() == rhs.base.coeffs() && lhs.bott.coeffs() == rhs.bott.coeffs())
}
