//! Exact integers and rationals, `p`-adic valuations, Bernoulli numbers and
//! the choice of Adams index.

mod bernoulli;
mod fraction;
mod numtheory;
mod valuation;

pub use bernoulli::{bernoulli, inverse_exp_series, num_denom, BernoulliTable};
pub use fraction::{factorial, ExactFraction};
pub use numtheory::{
    choose_k, denominator_valuation_check, denominator_valuation_check_with,
    multiplicative_order, ValuationCheck,
};
pub use valuation::{ensure_prime, is_prime, vp, vp_int, PValuation, Valuation};
