//! K-theory operations on `K(CP^N)`: Adams operations, Thom classes of
//! lines, the cannibalistic classes `rho^k`, the class `r^k(L-bar)`, the
//! `theta` operations and the Artin-Hasse logarithm with its double loop.

mod adams;
mod artin_hasse;

pub use adams::{
    lambda_line, psi, r_line_conjugate, r_polynomial_identity, r_virtual_conjugate_minus_one,
    rho_defining_relation, rho_line, rho_of_suspended_line, rho_sum,
    sphere_line_defining_relation, OperationParams,
};
pub use artin_hasse::{
    artin_hasse_log, artin_hasse_log_in, artin_hasse_vs_log_display, count_non_p_local,
    double_loop_sign, l_double_loop, rational_log_form, theta, AdamsAlgebra, DoubleLoopSign,
    SignComparison,
};
