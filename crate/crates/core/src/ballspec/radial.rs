//! Closed-form radial moments of normalized squared Bessel pairs on [0, 1].
//!
//! With μ a positive zero of J_p and J̄ := J/J_{p+1}(μ), repeated reduction
//! of ∫ x^j J_ν²(x) dx collapses the moments to polynomials in p and 1/μ²:
//!
//! ```text
//! ∫₀¹ r  [J̄²_p(μr) + J̄²_{p+1}(μr)] dr = 1,
//! ∫₀¹ r³ [J̄²_p(μr) + J̄²_{p+1}(μr)] dr = (2p²+3p+1)/(3μ²) + 1/3,
//! ∫₀¹ r⁵ [J̄²_p(μr) + J̄²_{p+1}(μr)] dr
//!     = (8p⁴+20p³−20p−8)/(15μ⁴) + (4p²+10p+4)/(15μ²) + 1/5.
//! ```

use super::bessel::bessel_j_prime;
use crate::BallError;

/// Raw r³ closed form (no zero-contract check).
pub fn radial_r3_closed_form(p: f64, mu: f64) -> f64 {
    (2.0 * p * p + 3.0 * p + 1.0) / (3.0 * mu * mu) + 1.0 / 3.0
}

/// Raw r⁵ closed form (no zero-contract check).
pub fn radial_r5_closed_form(p: f64, mu: f64) -> f64 {
    let p2 = p * p;
    let mu2 = mu * mu;
    (8.0 * p2 * p2 + 20.0 * p2 * p - 20.0 * p - 8.0) / (15.0 * mu2 * mu2)
        + (4.0 * p2 + 10.0 * p + 4.0) / (15.0 * mu2)
        + 0.2
}

fn check_zero(p: f64, mu: f64) -> Result<(), BallError> {
    let (j, jp) = bessel_j_prime(p, mu)?;
    if j.abs() > 1e-10 * jp.abs().max(1.0) {
        return Err(BallError::NotAZero {
            p,
            mu,
            resid: j.abs(),
        });
    }
    Ok(())
}

/// ∫₀¹ r³ [J̄²_p + J̄²_{p+1}] dr; μ must be a zero of J_p.
pub fn radial_integral_r3(p: f64, mu: f64) -> Result<f64, BallError> {
    check_zero(p, mu)?;
    Ok(radial_r3_closed_form(p, mu))
}

/// ∫₀¹ r⁵ [J̄²_p + J̄²_{p+1}] dr; μ must be a zero of J_p.
pub fn radial_integral_r5(p: f64, mu: f64) -> Result<f64, BallError> {
    check_zero(p, mu)?;
    Ok(radial_r5_closed_form(p, mu))
}
