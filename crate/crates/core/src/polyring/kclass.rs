use serde::{Deserialize, Serialize};

use super::claim::DomainClaim;
use super::series;
use crate::error::{Error, Result};
use crate::exact::ExactFraction;

/// An element of `K(CP^N)` written in the basis `u^i`, `u = L - 1`, with
/// `u^(N+1) = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "KClassRepr", into = "KClassRepr")]
pub struct KClass {
    coeffs: Vec<ExactFraction>,
    claim: DomainClaim,
}

#[derive(Serialize, Deserialize)]
struct KClassRepr {
    truncation: usize,
    coeffs: Vec<ExactFraction>,
    claim: DomainClaim,
}

impl TryFrom<KClassRepr> for KClass {
    type Error = Error;

    fn try_from(r: KClassRepr) -> Result<Self> {
        if r.coeffs.len() != r.truncation + 1 {
            return Err(Error::Domain(format!(
                "truncation {} needs {} coefficients, got {}",
                r.truncation,
                r.truncation + 1,
                r.coeffs.len()
            )));
        }
        KClass::new(r.coeffs, r.claim)
    }
}

impl From<KClass> for KClassRepr {
    fn from(k: KClass) -> Self {
        KClassRepr {
            truncation: k.truncation(),
            coeffs: k.coeffs,
            claim: k.claim,
        }
    }
}

impl KClass {
    /// Builds a class from its `u`-coefficients, validating the claim.
    /// The truncation is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<ExactFraction>, claim: DomainClaim) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain("a class needs at least one coefficient".into()));
        }
        let k = KClass { coeffs, claim };
        k.validate()?;
        Ok(k)
    }

    pub fn from_integers(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| c.into()).collect(), DomainClaim::Integral)
    }

    pub fn zero(truncation: usize) -> Self {
        KClass {
            coeffs: series::zero(truncation + 1),
            claim: DomainClaim::Integral,
        }
    }

    pub fn one(truncation: usize) -> Self {
        KClass {
            coeffs: series::one(truncation + 1),
            claim: DomainClaim::Integral,
        }
    }

    /// The integer `n` as a constant class.
    pub fn integer(n: i64, truncation: usize) -> Self {
        let mut coeffs = series::zero(truncation + 1);
        coeffs[0] = n.into();
        KClass {
            coeffs,
            claim: DomainClaim::Integral,
        }
    }

    /// `u = L - 1`.
    pub fn u(truncation: usize) -> Self {
        Self::monomial(1, truncation)
    }

    /// `u^i`, zero when `i > truncation`.
    pub fn monomial(i: usize, truncation: usize) -> Self {
        let mut coeffs = series::zero(truncation + 1);
        if i <= truncation {
            coeffs[i] = ExactFraction::one();
        }
        KClass {
            coeffs,
            claim: DomainClaim::Integral,
        }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ExactFraction] {
        &self.coeffs
    }

    /// Coefficient of `u^i` (zero past the truncation).
    pub fn coeff(&self, i: usize) -> ExactFraction {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn claim(&self) -> DomainClaim {
        self.claim
    }

    /// Value at `u = 0`, i.e. the virtual dimension.
    pub fn augmentation(&self) -> &ExactFraction {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(ExactFraction::is_zero)
    }

    pub fn in_augmentation_ideal(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    /// Re-checks every coefficient against the claim.
    pub fn validate(&self) -> Result<()> {
        match self.coeffs.iter().position(|c| !self.claim.admits(c)) {
            None => Ok(()),
            Some(index) => Err(Error::ClaimViolation {
                claim: self.claim,
                index,
                value: self.coeffs[index].clone(),
            }),
        }
    }

    /// The same class under another claim, validated.
    pub fn with_claim(&self, claim: DomainClaim) -> Result<Self> {
        Self::new(self.coeffs.clone(), claim)
    }

    fn check_truncation(&self, other: &KClass) -> Result<()> {
        if self.coeffs.len() != other.coeffs.len() {
            return Err(Error::TruncationMismatch {
                left: self.truncation(),
                right: other.truncation(),
            });
        }
        Ok(())
    }

    fn combined(&self, other: &KClass, coeffs: Vec<ExactFraction>) -> Result<Self> {
        Self::new(coeffs, self.claim.join(other.claim))
    }

    pub fn add(&self, other: &KClass) -> Result<Self> {
        self.check_truncation(other)?;
        self.combined(other, series::add(&self.coeffs, &other.coeffs))
    }

    pub fn sub(&self, other: &KClass) -> Result<Self> {
        self.check_truncation(other)?;
        self.combined(other, series::sub(&self.coeffs, &other.coeffs))
    }

    pub fn mul(&self, other: &KClass) -> Result<Self> {
        self.check_truncation(other)?;
        self.combined(other, series::mul(&self.coeffs, &other.coeffs))
    }

    pub fn negate(&self) -> Self {
        KClass {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            claim: self.claim,
        }
    }

    /// `s * self`, keeping the claim. Fails if the result leaves the ring;
    /// widen the claim first when dividing.
    pub fn scalar_mul(&self, s: &ExactFraction) -> Result<Self> {
        Self::new(series::scale(&self.coeffs, s), self.claim)
    }

    /// Adds the constant `c`.
    pub fn add_constant(&self, c: &ExactFraction) -> Result<Self> {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] += c;
        Self::new(coeffs, self.claim)
    }

    pub fn pow(&self, n: u64) -> Self {
        KClass {
            coeffs: series::pow(&self.coeffs, n),
            claim: self.claim,
        }
    }

    /// Multiplicative inverse. The augmentation must be a unit of the
    /// claimed ring.
    pub fn invert(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::Singular);
        }
        if !self.claim.admits_inverse(a0) {
            return Err(Error::ClaimViolation {
                claim: self.claim,
                index: 0,
                value: a0.recip()?,
            });
        }
        Self::new(series::inverse(&self.coeffs), self.claim)
    }

    /// Substitutes `u -> g` where `g` has zero augmentation.
    pub(crate) fn substitute(&self, g: &[ExactFraction]) -> Vec<ExactFraction> {
        series::compose(&self.coeffs, g)
    }

    /// The Adams operation `psi^k`, the ring endomorphism with
    /// `L^a -> L^(ak)`. `k` may be negative (`psi^-1` is conjugation).
    pub fn adams(&self, k: i64) -> Self {
        let n = self.truncation();
        let mut g = line_power(k, n).coeffs;
        g[0] -= &ExactFraction::one();
        KClass {
            coeffs: self.substitute(&g),
            claim: self.claim,
        }
    }
}

/// `L^a` expanded in powers of `u` and truncated at `u^N`. Negative powers
/// go through the inverse of the unit `1 + u`.
pub fn line_power(a: i64, truncation: usize) -> KClass {
    let line = {
        let mut c = series::one(truncation + 1);
        if truncation >= 1 {
            c[1] = ExactFraction::one();
        }
        c
    };
    let base = if a >= 0 { line } else { series::inverse(&line) };
    KClass {
        coeffs: series::pow(&base, a.unsigned_abs()),
        claim: DomainClaim::Integral,
    }
}
