//! The suspension model `K~(X_+ ^ S^2) = K(X) . lambda`, where `lambda` is
//! the Bott class `L_1 - 1` of `K~(S^2)` and `lambda^2 = 0`.

use serde::Serialize;

use super::claim::DomainClaim;
use super::kclass::KClass;
use crate::error::Result;
use crate::exact::ExactFraction;

/// The class `a . lambda` in reduced K-theory of the suspension. All products
/// of two such classes vanish.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SuspensionClass {
    base: KClass,
}

/// `a . lambda`
pub fn suspend(a: &KClass) -> SuspensionClass {
    SuspensionClass { base: a.clone() }
}

impl SuspensionClass {
    pub fn zero(truncation: usize) -> Self {
        suspend(&KClass::zero(truncation))
    }

    /// The coefficient `a` of `a . lambda`.
    pub fn base(&self) -> &KClass {
        &self.base
    }

    pub fn truncation(&self) -> usize {
        self.base.truncation()
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero()
    }

    pub fn claim(&self) -> DomainClaim {
        self.base.claim()
    }

    pub fn with_claim(&self, claim: DomainClaim) -> Result<Self> {
        Ok(suspend(&self.base.with_claim(claim)?))
    }

    pub fn add(&self, other: &SuspensionClass) -> Result<Self> {
        Ok(suspend(&self.base.add(&other.base)?))
    }

    pub fn sub(&self, other: &SuspensionClass) -> Result<Self> {
        Ok(suspend(&self.base.sub(&other.base)?))
    }

    pub fn negate(&self) -> Self {
        suspend(&self.base.negate())
    }

    pub fn scalar_mul(&self, s: &ExactFraction) -> Result<Self> {
        Ok(suspend(&self.base.scalar_mul(s)?))
    }

    /// Module action of `K(X)`: `f . (a lambda) = (f a) lambda`.
    pub fn mul_kclass(&self, f: &KClass) -> Result<Self> {
        Ok(suspend(&self.base.mul(f)?))
    }

    /// Square-zero law: the product of two suspended classes is zero.
    pub fn mul(&self, other: &SuspensionClass) -> Result<Self> {
        let zero = KClass::zero(self.truncation());
        // still reject mismatched truncations
        self.base.add(&other.base)?;
        Ok(suspend(&zero.with_claim(self.claim().join(other.claim()))?))
    }

    pub fn pow(&self, n: u64) -> Self {
        match n {
            0 => suspend(&KClass::one(self.truncation())),
            1 => self.clone(),
            _ => Self::zero(self.truncation()),
        }
    }

    /// `psi^k(a lambda) = k psi^k(a) lambda`: Adams operations act on
    /// `K~(S^2)` by multiplication with `k`.
    pub fn psi(&self, k: i64) -> Result<Self> {
        Ok(suspend(&self.base.adams(k).scalar_mul(&ExactFraction::from(k))?))
    }
}

/// `psi^k` on a suspended class; see [`SuspensionClass::psi`].
pub fn psi_on_suspension(k: i64, s: &SuspensionClass) -> Result<SuspensionClass> {
    s.psi(k)
}

/// A class `a + b lambda` of `K(X x S^2) = K(X)[lambda]/(lambda^2)`. Used
/// where unstable classes such as `L-bar . L_1` have to be handled (the
/// ring `1 + K~(X_+ ^ S^2)` sits inside as `1 + b lambda`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SphereProductClass {
    pub base: KClass,
    pub bott: KClass,
}

impl SphereProductClass {
    pub fn new(base: KClass, bott: KClass) -> Result<Self> {
        // fail early on mismatched truncations
        base.add(&bott)?;
        Ok(SphereProductClass { base, bott })
    }

    pub fn from_base(a: &KClass) -> Self {
        SphereProductClass {
            base: a.clone(),
            bott: KClass::zero(a.truncation()),
        }
    }

    /// `1 + s`
    pub fn one_plus(s: &SuspensionClass) -> Self {
        SphereProductClass {
            base: KClass::one(s.truncation()),
            bott: s.base().clone(),
        }
    }

    /// `L_1 = 1 + lambda`, the Hopf line on the sphere factor.
    pub fn hopf_line(truncation: usize) -> Self {
        SphereProductClass {
            base: KClass::one(truncation),
            bott: KClass::one(truncation),
        }
    }

    pub fn truncation(&self) -> usize {
        self.base.truncation()
    }

    pub fn with_claim(&self, claim: DomainClaim) -> Result<Self> {
        Ok(SphereProductClass {
            base: self.base.with_claim(claim)?,
            bott: self.bott.with_claim(claim)?,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(SphereProductClass {
            base: self.base.add(&other.base)?,
            bott: self.bott.add(&other.bott)?,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Ok(SphereProductClass {
            base: self.base.sub(&other.base)?,
            bott: self.bott.sub(&other.bott)?,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(SphereProductClass {
            base: self.base.mul(&other.base)?,
            bott: self.base.mul(&other.bott)?.add(&self.bott.mul(&other.base)?)?,
        })
    }

    pub fn pow(&self, n: u64) -> Result<Self> {
        let mut acc = SphereProductClass::from_base(&KClass::one(self.truncation()));
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn scalar_mul(&self, s: &ExactFraction) -> Result<Self> {
        Ok(SphereProductClass {
            base: self.base.scalar_mul(s)?,
            bott: self.bott.scalar_mul(s)?,
        })
    }

    /// `(a + b lambda)^-1 = a^-1 - a^-2 b lambda`
    pub fn invert(&self) -> Result<Self> {
        let inv = self.base.invert()?;
        Ok(SphereProductClass {
            bott: inv.mul(&inv)?.mul(&self.bott)?.negate(),
            base: inv,
        })
    }

    pub fn psi(&self, k: i64) -> Result<Self> {
        Ok(SphereProductClass {
            base: self.base.adams(k),
            bott: self.bott.adams(k).scalar_mul(&ExactFraction::from(k))?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::line_power;

    #[test]
    fn square_zero() {
        let s = suspend(&KClass::u(4));
        assert!(s.mul(&s).unwrap().is_zero());
        assert!(s.pow(2).is_zero());
        assert!(suspend(&KClass::zero(3)).is_zero());
    }

    #[test]
    fn psi_multiplies_bott_class() {
        let n = 5;
        let s = suspend(&KClass::u(n));
        let got = psi_on_suspension(3, &s).unwrap();
        let expected = KClass::u(n).adams(3).scalar_mul(&3.into()).unwrap();
        assert_eq!(got.base(), &expected);
    }

    #[test]
    fn sphere_product_hopf_powers() {
        // L_1^k = 1 + k lambda
        let h = SphereProductClass::hopf_line(3);
        let h5 = h.pow(5).unwrap();
        assert_eq!(h5.base, KClass::one(3));
        assert_eq!(h5.bott, KClass::integer(5, 3));
        assert_eq!(h.psi(5).unwrap(), h5);
    }

    #[test]
    fn sphere_product_inverse() {
        let x = SphereProductClass::new(line_power(2, 4), KClass::u(4)).unwrap();
        let prod = x.mul(&x.invert().unwrap()).unwrap();
        assert_eq!(prod, SphereProductClass::from_base(&KClass::one(4)));
    }
}
