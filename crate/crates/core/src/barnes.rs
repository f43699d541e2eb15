//! Barnes zeta residues, generalized Bernoulli polynomials, and the sphere
//! spectral data they encode.
//!
//! The Barnes zeta function ζ_B(s, a) = Σ_{n≥0} C(n+d−1, d−1)(n+a)^{−s} has
//! simple poles at s = 1, …, d with residues expressed through the
//! generalized Bernoulli polynomials B_n^{(d)}(a) of the generating function
//! e^{−at}/(1−e^{−t})^d. The boundary Dirac operator on S^{m−1} has
//! eigenvalues ±(n + (m−1)/2) with multiplicities d_n(m), and its squared
//! zeta function reduces to ζ_B(2s, m/2 − 1) up to the spinor dimension.

use crate::exact::{binomial, factorial, Poly, Rational, SqrtPiNumber};
use crate::BallError;
use num_traits::ToPrimitive;

/// B_n^{(d)}(a) with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenBernoulli {
    pub n: usize,
    pub d: u32,
    pub poly: Poly,
}

/// Residue of ζ_B(s, a) at an integer pole candidate z, as a polynomial in a.
/// Identically zero when z ∉ {1, …, d}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarnesResidueValue {
    pub z: i64,
    pub d: u32,
    pub value: Poly,
}

/// Sphere eigenvalue multiplicities d_0(m) … d_{n_max}(m) with the spinor
/// dimension d_s = 2^{m/2}.
#[derive(Clone, Debug)]
pub struct MultiplicityTable {
    pub m: i64,
    pub d_s: u64,
    pub entries: Vec<u128>,
}

/// Coefficients of u/(e^u − 1) up to u^n (that is, B_k/k! with Bernoulli
/// numbers in the B_1 = −1/2 convention), via power-series reciprocation.
fn exp_kernel_series(n: usize) -> Vec<Rational> {
    // f(u) = (e^u - 1)/u has coefficients 1/(k+1)!
    let f: Vec<Rational> = (0..=n)
        .map(|k| Rational::from_bigint(factorial(k as u64 + 1)).recip())
        .collect();
    let mut g = vec![Rational::zero(); n + 1];
    g[0] = Rational::one();
    for k in 1..=n {
        let mut acc = Rational::zero();
        for j in 1..=k {
            acc += f[j].clone() * g[k - j].clone();
        }
        g[k] = -acc;
    }
    g
}

/// The generalized Bernoulli polynomial B_n^{(d)}(a), computed exactly from
/// the generating function: B_n^{(d)}(a) = n! · [u^n] (u/(e^u−1))^d · e^{au}.
/// The sign conventions match the e^{−at}/(1−e^{−t})^d form after t ↦ −u.
pub fn gen_bernoulli(n: usize, d: u32) -> GenBernoulli {
    assert!(d >= 1, "d must be positive");
    let base = exp_kernel_series(n);
    // (u/(e^u-1))^d truncated at u^n
    let mut pow = vec![Rational::zero(); n + 1];
    pow[0] = Rational::one();
    for _ in 0..d {
        let mut next = vec![Rational::zero(); n + 1];
        for i in 0..=n {
            if pow[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                let t = pow[i].clone() * base[j].clone();
                next[i + j] += t;
            }
        }
        pow = next;
    }
    // multiply by e^{au}: [u^n] picks Σ_k pow[n-k] a^k / k!
    let n_fact = Rational::from_bigint(factorial(n as u64));
    let coeffs: Vec<Rational> = (0..=n)
        .map(|k| {
            let c = pow[n - k].clone() / Rational::from_bigint(factorial(k as u64));
            c * n_fact.clone()
        })
        .collect();
    GenBernoulli {
        n,
        d,
        poly: Poly::from_coeffs(coeffs),
    }
}

/// Res_{s=z} ζ_B(s, a) = (−1)^{d+z} / ((z−1)!(d−z)!) · B_{d−z}^{(d)}(a)
/// for z ∈ {1, …, d}; the zero polynomial otherwise (no pole).
pub fn barnes_residue(z: i64, d: u32) -> BarnesResidueValue {
    if z < 1 || z > d as i64 {
        return BarnesResidueValue {
            z,
            d,
            value: Poly::zero(),
        };
    }
    let b = gen_bernoulli((d as i64 - z) as usize, d);
    let sign = if (d as i64 + z).rem_euclid(2) == 0 {
        1
    } else {
        -1
    };
    let denom = Rational::from_bigint(factorial(z as u64 - 1))
        * Rational::from_bigint(factorial((d as i64 - z) as u64));
    BarnesResidueValue {
        z,
        d,
        value: b.poly.scale(&(Rational::from_int(sign) / denom)),
    }
}

/// Value of ζ_B(s, a) at a non-positive integer s = −n:
/// ζ_B(−n, a) = (−1)^d · n!/(n+d)! · B_{n+d}^{(d)}(a).
pub fn barnes_value_nonpositive(neg_n: i64, d: u32) -> Poly {
    assert!(neg_n <= 0);
    let n = (-neg_n) as usize;
    let b = gen_bernoulli(n + d as usize, d);
    let sign = if d.is_multiple_of(2) { 1 } else { -1 };
    let c = Rational::from_int(sign) * Rational::from_bigint(factorial(n as u64))
        / Rational::from_bigint(factorial((n + d as usize) as u64));
    b.poly.scale(&c)
}

/// Spinor fiber dimension 2^{m/2} for even m.
pub fn spinor_dim(m: i64) -> Result<u64, BallError> {
    if m < 4 || m % 2 != 0 {
        return Err(BallError::BadDimension { m });
    }
    Ok(1u64 << (m / 2))
}

/// d_n(m) = ½ · d_s · C(m+n−2, n), the multiplicity of the sphere eigenvalue
/// ±(n + (m−1)/2). Even m only.
pub fn multiplicity(n: u64, m: i64) -> Result<u128, BallError> {
    let d_s = spinor_dim(m)?;
    let c = binomial(m as u64 + n - 2, n);
    let v = (c * (d_s / 2)).to_u128().expect("multiplicity overflow");
    Ok(v)
}

impl MultiplicityTable {
    pub fn new(m: i64, n_max: u64) -> Result<Self, BallError> {
        let d_s = spinor_dim(m)?;
        let entries = (0..=n_max)
            .map(|n| multiplicity(n, m))
            .collect::<Result<_, _>>()?;
        Ok(MultiplicityTable { m, d_s, entries })
    }
}

/// The value a = m/2 − 1 at which every Barnes quantity is evaluated.
fn barnes_argument(m: i64) -> Rational {
    Rational::new(m, 2) - Rational::one()
}

/// Residue of the squared boundary operator's zeta function
/// ζ_{S^d}(s) = 2 d_s ζ_B(2s, m/2−1) at s = s0 (passed as 2·s0), exactly:
/// the substitution σ = 2s contributes a factor 1/2, so
/// Res = d_s · Res_{σ=2s0} ζ_B(σ, m/2−1). Zero when 2s0 ∉ {1, …, m−1}.
pub fn base_zeta_residue(two_s0: i64, m: i64) -> Result<SqrtPiNumber, BallError> {
    let d_s = spinor_dim(m)?;
    let d = (m - 1) as u32;
    let res = barnes_residue(two_s0, d);
    if res.value.is_zero() {
        return Ok(SqrtPiNumber::zero());
    }
    let v = res.value.eval(&barnes_argument(m)) * Rational::from_int(d_s as i64);
    Ok(SqrtPiNumber::from_rational(v))
}

/// Value of ζ_{S^d} at a non-positive integer-or-half-integer point s with
/// 2s = two_s ≤ 0 an integer: 2 d_s ζ_B(2s, m/2−1) via the closed form at
/// non-positive integers.
pub fn base_zeta_value_nonpositive(two_s: i64, m: i64) -> Result<SqrtPiNumber, BallError> {
    if two_s > 0 {
        return Err(BallError::ResidueUnsupported(format!(
            "base zeta value requested at positive argument {two_s}/2"
        )));
    }
    let d_s = spinor_dim(m)?;
    let d = (m - 1) as u32;
    let v = barnes_value_nonpositive(two_s, d).eval(&barnes_argument(m))
        * Rational::from_int(2 * d_s as i64);
    Ok(SqrtPiNumber::from_rational(v))
}
