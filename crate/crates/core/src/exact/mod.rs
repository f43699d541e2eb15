//! Exact arithmetic kernel: arbitrary-precision rationals, Gaussian
//! rationals, dense polynomials, rational functions of the dimension m, the
//! coefficient ring `Q(m)[β]`, and Laurent polynomials in √π.
//!
//! Everything here is immutable after construction and all operations are
//! pure, so values can be shared freely across threads.

mod coeffexpr;
mod gauss;
mod poly;
mod ratfunc;
mod rational;
mod sqrtpi;

pub use coeffexpr::CoeffExpr;
pub use gauss::GaussRational;
pub use poly::Poly;
pub use ratfunc::RationalFunction;
pub use rational::{binomial, factorial, Rational};
pub use sqrtpi::{beta_value, gamma_half, gamma_half_f64, gamma_residue_at, SqrtPiNumber, SQRT_PI};
