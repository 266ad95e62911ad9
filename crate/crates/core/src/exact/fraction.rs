use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An arbitrary-precision rational number, always kept in lowest terms with
/// a positive denominator.
///
/// Serializes as the string `"num/denom"`, including integers (`"3/1"`) and
/// zero (`"0/1"`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExactFraction(BigRational);

impl ExactFraction {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        Ok(Self(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("reciprocal of zero".into()));
        }
        Ok(Self(self.0.recip()))
    }

    pub fn pow(&self, exp: i32) -> Self {
        Self(num_traits::Pow::pow(&self.0, exp))
    }

    /// `1/n!`
    pub fn inv_factorial(n: u32) -> Self {
        Self(BigRational::new(BigInt::one(), factorial(n)))
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

impl From<BigRational> for ExactFraction {
    fn from(value: BigRational) -> Self {
        Self(value)
    }
}

impl From<i64> for ExactFraction {
    fn from(value: i64) -> Self {
        Self::from_integer(value)
    }
}

impl From<BigInt> for ExactFraction {
    fn from(value: BigInt) -> Self {
        Self::from_integer(value)
    }
}

impl fmt::Display for ExactFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for ExactFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExactFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Domain(format!("malformed fraction {s:?}"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        Self::new(n, d)
    }
}

impl Serialize for ExactFraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactFraction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&ExactFraction> for &ExactFraction {
            type Output = ExactFraction;
            fn $method(self, rhs: &ExactFraction) -> ExactFraction {
                ExactFraction((&self.0).$method(&rhs.0))
            }
        }
        impl $tr<ExactFraction> for ExactFraction {
            type Output = ExactFraction;
            fn $method(self, rhs: ExactFraction) -> ExactFraction {
                ExactFraction(self.0.$method(rhs.0))
            }
        }
        impl $tr<&ExactFraction> for ExactFraction {
            type Output = ExactFraction;
            fn $method(self, rhs: &ExactFraction) -> ExactFraction {
                ExactFraction(self.0.$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

/// Panics on division by zero, like the integer operators.
impl Div<&ExactFraction> for &ExactFraction {
    type Output = ExactFraction;
    fn div(self, rhs: &ExactFraction) -> ExactFraction {
        ExactFraction(&self.0 / &rhs.0)
    }
}

impl Div<ExactFraction> for ExactFraction {
    type Output = ExactFraction;
    fn div(self, rhs: ExactFraction) -> ExactFraction {
        ExactFraction(self.0 / rhs.0)
    }
}

impl AddAssign<&ExactFraction> for ExactFraction {
    fn add_assign(&mut self, rhs: &ExactFraction) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&ExactFraction> for ExactFraction {
    fn sub_assign(&mut self, rhs: &ExactFraction) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&ExactFraction> for ExactFraction {
    fn mul_assign(&mut self, rhs: &ExactFraction) {
        self.0 *= &rhs.0;
    }
}

impl Neg for ExactFraction {
    type Output = ExactFraction;
    fn neg(self) -> ExactFraction {
        ExactFraction(-self.0)
    }
}

impl Neg for &ExactFraction {
    type Output = ExactFraction;
    fn neg(self) -> ExactFraction {
        ExactFraction(-&self.0)
    }
}

impl Sum for ExactFraction {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl Product for ExactFraction {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| acc * x)
    }
}
