use serde::{Deserialize, Serialize};

use super::series;
use crate::error::{Error, Result};
use crate::exact::ExactFraction;

/// An element of `H^*(CP^N; Q)` in the basis `e^i`, `e = c_1(L)`, where
/// `e^i` sits in degree `2i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "CohClassRepr", into = "CohClassRepr")]
pub struct CohClass {
    coeffs: Vec<ExactFraction>,
}

#[derive(Serialize, Deserialize)]
struct CohClassRepr {
    truncation: usize,
    coeffs: Vec<ExactFraction>,
}

impl TryFrom<CohClassRepr> for CohClass {
    type Error = Error;

    fn try_from(r: CohClassRepr) -> Result<Self> {
        if r.coeffs.len() != r.truncation + 1 {
            return Err(Error::Domain(format!(
                "truncation {} needs {} coefficients",
                r.truncation,
                r.truncation + 1
            )));
        }
        CohClass::new(r.coeffs)
    }
}

impl From<CohClass> for CohClassRepr {
    fn from(c: CohClass) -> Self {
        CohClassRepr {
            truncation: c.truncation(),
            coeffs: c.coeffs,
        }
    }
}

impl CohClass {
    pub fn new(coeffs: Vec<ExactFraction>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain("a class needs at least one coefficient".into()));
        }
        Ok(CohClass { coeffs })
    }

    pub fn zero(truncation: usize) -> Self {
        CohClass {
            coeffs: series::zero(truncation + 1),
        }
    }

    pub fn one(truncation: usize) -> Self {
        CohClass {
            coeffs: series::one(truncation + 1),
        }
    }

    /// `exp(a e)`, the Chern character of `L^a`.
    pub fn exp(a: i64, truncation: usize) -> Self {
        let mut coeffs = series::exp_minus_one(a, truncation + 1);
        coeffs[0] = ExactFraction::one();
        CohClass { coeffs }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ExactFraction] {
        &self.coeffs
    }

    /// Coefficient of `e^i`.
    pub fn coeff(&self, i: usize) -> ExactFraction {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    fn check_truncation(&self, other: &CohClass) -> Result<()> {
        if self.coeffs.len() != other.coeffs.len() {
            return Err(Error::TruncationMismatch {
                left: self.truncation(),
                right: other.truncation(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &CohClass) -> Result<Self> {
        self.check_truncation(other)?;
        Ok(CohClass {
            coeffs: series::add(&self.coeffs, &other.coeffs),
        })
    }

    pub fn sub(&self, other: &CohClass) -> Result<Self> {
        self.check_truncation(other)?;
        Ok(CohClass {
            coeffs: series::sub(&self.coeffs, &other.coeffs),
        })
    }

    pub fn mul(&self, other: &CohClass) -> Result<Self> {
        self.check_truncation(other)?;
        Ok(CohClass {
            coeffs: series::mul(&self.coeffs, &other.coeffs),
        })
    }

    pub fn scalar_mul(&self, s: &ExactFraction) -> Self {
        CohClass {
            coeffs: series::scale(&self.coeffs, s),
        }
    }

    /// Natural logarithm of a class with augmentation 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Domain("log needs augmentation 1".into()));
        }
        let mut h = self.coeffs.clone();
        h[0] = ExactFraction::zero();
        Ok(CohClass {
            coeffs: series::log_one_plus(&h),
        })
    }
}
