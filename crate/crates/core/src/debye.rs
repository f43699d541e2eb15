//! Uniform large-order asymptotics for the modified Bessel function:
//! the polynomials u_l(t) of the expansion
//!
//! ```text
//! I_p(zp) ~ e^{pη} / (√(2πp) (1+z²)^{1/4}) · [1 + Σ_{l≥1} u_l(t)/p^l],
//! t = 1/√(1+z²),  η = √(1+z²) + ln(z/(1+√(1+z²))),
//! ```
//!
//! and the cumulant polynomials D_q(t) collecting 1/p^q in the formal
//! logarithm of the bracket. All series work is exact rational arithmetic
//! on truncated polynomial vectors in 1/p; floats enter only in the numeric
//! evaluator.

use crate::error::DebyeError;
use crate::exact::{Poly, Rational};

/// u_l(t): degree 3l, parity (−1)^l, u_0 = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DebyePolynomial {
    pub order: usize,
    pub poly: Poly,
}

/// D_q(t): degree 3q coefficient of 1/p^q in the log of the u-series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CumulantPolynomial {
    pub order: usize,
    pub poly: Poly,
}

impl DebyePolynomial {
    pub fn initial() -> Self {
        DebyePolynomial {
            order: 0,
            poly: Poly::one(),
        }
    }
}

/// One step of the recursion
/// u_{l+1}(t) = ½ t²(1−t²) u_l'(t) + ⅛ ∫₀ᵗ (1−5τ²) u_l(τ) dτ.
///
/// The integration constant is fixed to 0, which pins the printed D_1, D_2.
pub fn debye_next(u: &DebyePolynomial) -> DebyePolynomial {
    let half = Rational::new(1, 2);
    let eighth = Rational::new(1, 8);
    // t^2 - t^4
    let t2_minus_t4 = Poly::from_ints(&[0, 0, 1, 0, -1]);
    let first = (&t2_minus_t4 * &u.poly.derivative()).scale(&half);
    // (1 - 5 t^2) u_l, then antidifferentiated with zero constant
    let second = (&Poly::from_ints(&[1, 0, -5]) * &u.poly)
        .integral()
        .scale(&eighth);
    DebyePolynomial {
        order: u.order + 1,
        poly: &first + &second,
    }
}

/// u_0 … u_L.
pub fn debye_polynomials(max_l: usize) -> Vec<DebyePolynomial> {
    let mut out = vec![DebyePolynomial::initial()];
    for _ in 0..max_l {
        out.push(debye_next(out.last().unwrap()));
    }
    out
}

/// D_1 … D_{max_q} via the formal logarithm of 1 + Σ u_l x^l (x = 1/p):
/// q·D_q = q·u_q − Σ_{j<q} j·D_j·u_{q−j}.
pub fn cumulants(max_q: usize) -> Vec<CumulantPolynomial> {
    assert!(max_q >= 1);
    let us = debye_polynomials(max_q);
    let mut ds: Vec<Poly> = Vec::with_capacity(max_q);
    for q in 1..=max_q {
        let mut acc = us[q].poly.scale(&Rational::from_int(q as i64));
        for j in 1..q {
            let t = (&ds[j - 1] * &us[q - j].poly).scale(&Rational::from_int(j as i64));
            acc = &acc - &t;
        }
        ds.push(acc.scale(&Rational::new(1, q as i64)));
    }
    ds.into_iter()
        .enumerate()
        .map(|(i, poly)| CumulantPolynomial { order: i + 1, poly })
        .collect()
}

/// Formal exponential of Σ D_q x^q, truncated at x^max_l:
/// l·e_l = Σ_{j≤l} j·D_j·e_{l−j}. Returns e_0 … e_{max_l}.
pub fn reexponentiate(ds: &[CumulantPolynomial], max_l: usize) -> Vec<Poly> {
    let mut es: Vec<Poly> = vec![Poly::one()];
    for l in 1..=max_l {
        let mut acc = Poly::zero();
        for j in 1..=l.min(ds.len()) {
            let t = (&ds[j - 1].poly * &es[l - j]).scale(&Rational::from_int(j as i64));
            acc = &acc + &t;
        }
        es.push(acc.scale(&Rational::new(1, l as i64)));
    }
    es
}

/// The expansion variables (η, t) at z > 0.
pub fn eta_and_t(z: f64) -> Result<(f64, f64), DebyeError> {
    if !(z > 0.0) {
        return Err(DebyeError::NonPositiveArgument { z });
    }
    let s = (1.0 + z * z).sqrt();
    let t = 1.0 / s;
    let eta = s + (z / (1.0 + s)).ln();
    Ok((eta, t))
}

/// Numeric I_p(zp) from the uniform expansion truncated after u_L.
/// A cross-check oracle only; demands the asymptotic regime p ≥ 10.
pub fn bessel_i_uniform(p: f64, z: f64, max_l: usize) -> Result<f64, DebyeError> {
    if p < 10.0 {
        return Err(DebyeError::OrderTooSmall { p });
    }
    let (eta, t) = eta_and_t(z)?;
    let us = debye_polynomials(max_l);
    let mut bracket = 1.0;
    for (l, u) in us.iter().enumerate().skip(1) {
        bracket += u.poly.eval_f64(t) / p.powi(l as i32);
    }
    let prefactor =
        (p * eta).exp() / ((2.0 * std::f64::consts::PI * p).sqrt() * (1.0 + z * z).powf(0.25));
    Ok(prefactor * bracket)
}
