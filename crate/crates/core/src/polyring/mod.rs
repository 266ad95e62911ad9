//! Truncated polynomial models: `K(CP^N) = Q[u]/(u^(N+1))` with `u = L - 1`,
//! `H^*(CP^N; Q) = Q[e]/(e^(N+1))`, and the square-zero suspension model.

mod claim;
mod cohclass;
mod kclass;
pub(crate) mod series;
mod suspension;

pub use claim::DomainClaim;
pub use cohclass::CohClass;
pub use kclass::{line_power, KClass};
pub use suspension::{psi_on_suspension, suspend, SphereProductClass, SuspensionClass};

/// Truncation used for computations that target cohomology of degree
/// `4n - 2`.
pub fn default_truncation(n: usize) -> usize {
    2 * n + 2
}
