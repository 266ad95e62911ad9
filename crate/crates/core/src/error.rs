use thiserror::Error;

use crate::exact::ExactFraction;
use crate::polyring::DomainClaim;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the operation's domain (zero index, even `k`, ...).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },

    /// The augmentation of the class to invert is zero.
    #[error("class is not invertible: augmentation is zero")]
    Singular,

    /// A coefficient falls outside the ring named by the claim.
    #[error("coefficient {value} of u^{index} is not in the ring of claim {claim}")]
    ClaimViolation {
        claim: DomainClaim,
        index: usize,
        value: ExactFraction,
    },

    /// Division by `p^t` in a `theta` operation was not exact in `Z_(p)`.
    #[error("theta^({prime}^{exponent}) left coefficient {value} of u^{index} outside Z_({prime})")]
    IntegralityViolation {
        prime: u64,
        exponent: u32,
        index: usize,
        value: ExactFraction,
    },

    #[error("unsupported: {0}")]
    Unsupported(String),
}
