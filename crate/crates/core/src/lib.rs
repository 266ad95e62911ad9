//! Exact-arithmetic verification of the integral Riemann-Roch identities for
//! surface bundles.
//!
//! Everything here is computed over exact rationals. Integrality statements
//! (integral, `p`-local, `k`-inverted) are checked as predicates on the
//! computed coefficients rather than enforced by the representation, so that a
//! wrong convention shows up as a failed check instead of being impossible to
//! express.
//!
//! Module map:
//!
//! * [`exact`]: fractions, `p`-adic valuations, Bernoulli numbers and the
//!   number theory behind the choice of the Adams index `k`.
//! * [`polyring`]: truncated polynomial models of `K(CP^N)` and
//!   `H^*(CP^N; Q)`, plus the square-zero model of a suspension.
//! * [`kops`]: Adams operations, cannibalistic classes, `r^k`, the `theta`
//!   operations and the Artin-Hasse logarithm.
//! * [`chern`]: Chern character, `s_n = n! ch_n` and the `r^k` eigenvalue.
//! * [`dyerlashof`]: admissible words, leading terms of `Q^j(a_n)` and the
//!   counterexample certificate for Akita's conjecture.
//! * [`bockstein`]: mod `p` Bockstein pages of the two model algebras.

pub mod bockstein;
pub mod chern;
pub mod dyerlashof;
pub mod error;
pub mod exact;
pub mod kops;
pub mod polyring;

pub use error::{Error, Result};
pub use exact::{ExactFraction, PValuation, Valuation};
pub use polyring::{CohClass, DomainClaim, KClass, SuspensionClass};
