//! Independent spectral verification on the unit ball: Bessel machinery,
//! heat-trace summation, coefficient extraction, and the exact residue
//! pipeline, together with the exact reference values they must reproduce.

mod bessel;
mod fit;
mod heat;
pub mod quad;
mod radial;
mod residue;
mod zeros;

pub use bessel::{bessel_j, bessel_j_prime, NU_MAX, X_MAX};
pub use fit::{extract_coefficients, CoefficientExtract};
pub use heat::{
    default_lambda, heat_trace, smeared_heat_trace, BallConfig, HeatTraceSample, SmearedF,
};
pub use radial::{
    radial_integral_r3, radial_integral_r5, radial_r3_closed_form, radial_r5_closed_form,
};
pub use residue::{
    a3_ball_closed_form, a3_residue_total, residue_pipeline, smeared_a3_exact, OrderWeight,
};
pub use zeros::{bessel_zeros, cache_dir, min_order, CacheStatus, ZeroTable};

use crate::barnes::spinor_dim;
use crate::exact::{gamma_half, Rational, SqrtPiNumber};
use crate::invariants::{a3_density, BoundaryGeometryData};
use crate::{BallError, InvariantError};

/// (4π)^{−k/2} as an exact √π-Laurent monomial.
pub fn four_pi_pow_neg_half(k: i64) -> SqrtPiNumber {
    let c = if k >= 0 {
        Rational::new(1, 1 << k)
    } else {
        Rational::from_int(1 << (-k))
    };
    SqrtPiNumber::monomial(c, -k as i32)
}

/// Vol(S^{m−1}) = 2 π^{m/2} / Γ(m/2), exactly.
pub fn sphere_volume(m: i64) -> Result<SqrtPiNumber, BallError> {
    Ok(SqrtPiNumber::monomial(Rational::from_int(2), m as i32).div(&gamma_half(m)?)?)
}

/// Vol(B^m) = π^{m/2} / Γ(m/2 + 1), exactly.
pub fn ball_volume(m: i64) -> Result<SqrtPiNumber, BallError> {
    Ok(SqrtPiNumber::monomial(Rational::one(), m as i32).div(&gamma_half(m + 2)?)?)
}

/// Exact a₀ for the ball: (4π)^{−m/2} Vol(B^m) d_s.
pub fn ball_exact_a0(m: i64) -> Result<SqrtPiNumber, BallError> {
    let d_s = spinor_dim(m)? as i64;
    Ok((&four_pi_pow_neg_half(m) * &ball_volume(m)?).scale(&Rational::from_int(d_s)))
}

/// Exact a₁ for the ball: (4π)^{−(m−1)/2} (β(m)−1)/4 · Vol(S^{m−1}) d_s.
pub fn ball_exact_a1(m: i64) -> Result<SqrtPiNumber, BallError> {
    let d_s = spinor_dim(m)? as i64;
    let beta = crate::exact::beta_value(m)?;
    let factor = &beta - &SqrtPiNumber::one();
    let v = &(&four_pi_pow_neg_half(m - 1) * &sphere_volume(m)?) * &factor;
    Ok(v.scale(&Rational::new(d_s, 4)))
}

/// Exact a₂ for the flat ball: only the boundary extrinsic term survives,
/// (4π)^{−m/2} (1/3)(1 − (3/4)πβ(m)) (m−1) Vol(S^{m−1}) d_s.
pub fn ball_exact_a2(m: i64) -> Result<SqrtPiNumber, BallError> {
    let d_s = spinor_dim(m)? as i64;
    let beta = crate::exact::beta_value(m)?;
    let pi = SqrtPiNumber::monomial(Rational::one(), 2);
    let factor = &SqrtPiNumber::one() - &(&pi * &beta).scale(&Rational::new(3, 4));
    let v = &(&four_pi_pow_neg_half(m) * &sphere_volume(m)?) * &factor;
    Ok(v.scale(&Rational::new(d_s * (m - 1), 3)))
}

/// Exact a₃ for the ball (the closed form of the residue route).
pub fn ball_exact_a3(m: i64) -> Result<SqrtPiNumber, BallError> {
    a3_ball_closed_form(m)
}

/// a₃ via the boundary-density route for ball data with radial smearing:
/// (4π)^{−(m−1)/2} Vol(S^{m−1}) × density(ψ=0, Θ=(m−1)/2, L=δ, boundary
/// dictionary of F). The residue route must reproduce this exactly.
pub fn a3_ball_from_density(m: i64, f: &SmearedF) -> Result<SqrtPiNumber, BallError> {
    let rep = crate::invariants::clifford_rep(m).map_err(invariant_to_ball)?;
    let data = BoundaryGeometryData::ball(
        rep,
        f.boundary_value(),
        f.boundary_normal_derivative(),
        f.boundary_second_derivative(),
    );
    let density = a3_density(&data).map_err(invariant_to_ball)?;
    let v = density.to_sqrtpi().map_err(invariant_to_ball)?;
    Ok(&(&four_pi_pow_neg_half(m - 1) * &sphere_volume(m)?) * &v)
}

fn invariant_to_ball(e: InvariantError) -> BallError {
    match e {
        InvariantError::Exact(x) => BallError::Exact(x),
        other => BallError::ResidueUnsupported(other.to_string()),
    }
}
