use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::ExactFraction;

/// The coefficient ring a class is claimed to live in.
///
/// Classes are always stored over `Q`; a claim is a predicate that is
/// re-checked against the actual coefficients after every operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DomainClaim {
    /// `Z`
    Integral,
    /// `Z_(p)`: denominators prime to `p`
    PLocal(u64),
    /// `Z[1/k]`: denominators dividing a power of `k`
    KInverted(u64),
    /// `Q`
    Rational,
}

impl DomainClaim {
    pub fn admits(&self, q: &ExactFraction) -> bool {
        let d = q.denom();
        match *self {
            DomainClaim::Integral => d.is_one(),
            DomainClaim::PLocal(p) => !(d % BigInt::from(p)).is_zero(),
            DomainClaim::KInverted(k) => divides_power_of(d, k),
            DomainClaim::Rational => true,
        }
    }

    /// `q` is invertible in the claimed ring.
    pub fn admits_inverse(&self, q: &ExactFraction) -> bool {
        match q.recip() {
            Ok(inv) => self.admits(q) && self.admits(&inv),
            Err(_) => false,
        }
    }

    /// Smallest claim whose ring contains both rings.
    pub fn join(self, other: DomainClaim) -> DomainClaim {
        use DomainClaim::*;
        match (self, other) {
            (a, b) if a == b => a,
            (Integral, x) | (x, Integral) => x,
            (Rational, _) | (_, Rational) => Rational,
            (PLocal(p), KInverted(k)) | (KInverted(k), PLocal(p)) => {
                if k % p == 0 {
                    Rational
                } else {
                    PLocal(p)
                }
            }
            (KInverted(k), KInverted(l)) => KInverted(k.lcm(&l)),
            (PLocal(_), PLocal(_)) => Rational,
        }
    }
}

fn divides_power_of(d: &BigInt, k: u64) -> bool {
    let k = BigInt::from(k);
    let mut d = d.clone();
    loop {
        if d.is_one() {
            return true;
        }
        let g = d.gcd(&k);
        if g.is_one() {
            return false;
        }
        d /= g;
    }
}

impl fmt::Display for DomainClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainClaim::Integral => f.write_str("INTEGRAL"),
            DomainClaim::PLocal(p) => write!(f, "P_LOCAL({p})"),
            DomainClaim::KInverted(k) => write!(f, "K_INVERTED({k})"),
            DomainClaim::Rational => f.write_str("RATIONAL"),
        }
    }
}

impl FromStr for DomainClaim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Domain(format!("unknown domain claim {s:?}"));
        let arg = |prefix: &str| -> Result<u64> {
            s.strip_prefix(prefix)
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|r| r.parse().ok())
                .ok_or_else(bad)
        };
        match s {
            "INTEGRAL" => Ok(DomainClaim::Integral),
            "RATIONAL" => Ok(DomainClaim::Rational),
            _ if s.starts_with("P_LOCAL(") => Ok(DomainClaim::PLocal(arg("P_LOCAL(")?)),
            _ if s.starts_with("K_INVERTED(") => Ok(DomainClaim::KInverted(arg("K_INVERTED(")?)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for DomainClaim {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DomainClaim {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use DomainClaim::*;

    fn q(n: i64, d: i64) -> ExactFraction {
        ExactFraction::new(n, d).unwrap()
    }

    #[test]
    fn membership() {
        assert!(Integral.admits(&q(4, 1)));
        assert!(!Integral.admits(&q(1, 2)));
        assert!(PLocal(3).admits(&q(1, 4)));
        assert!(!PLocal(3).admits(&q(1, 6)));
        assert!(KInverted(6).admits(&q(5, 72)));
        assert!(!KInverted(6).admits(&q(1, 5)));
        assert!(Rational.admits(&q(1, 97)));
    }

    #[test]
    fn units() {
        assert!(!Integral.admits_inverse(&q(3, 1)));
        assert!(KInverted(3).admits_inverse(&q(3, 1)));
        assert!(PLocal(5).admits_inverse(&q(3, 2)));
        assert!(!PLocal(5).admits_inverse(&q(0, 1)));
    }

    #[test]
    fn joins() {
        assert_eq!(Integral.join(PLocal(3)), PLocal(3));
        assert_eq!(PLocal(3).join(KInverted(5)), PLocal(3));
        assert_eq!(PLocal(3).join(KInverted(6)), Rational);
        assert_eq!(KInverted(4).join(KInverted(6)), KInverted(12));
        assert_eq!(PLocal(3).join(PLocal(5)), Rational);
    }

    #[test]
    fn text_round_trip() {
        for c in [Integral, PLocal(7), KInverted(5), Rational] {
            assert_eq!(c.to_string().parse::<DomainClaim>().unwrap(), c);
        }
        assert!("P_LOCAL(x)".parse::<DomainClaim>().is_err());
    }
}
