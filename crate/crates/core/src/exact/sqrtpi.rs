//! Laurent polynomials in √π with rational coefficients.
//!
//! Values of Γ at half-integer arguments are rational multiples of integer
//! powers of √π, and those are the only transcendentals the exact layer ever
//! produces, so Σ c_k (√π)^k with k ∈ ℤ is closed under the Γ-arithmetic we
//! need. √π is transcendental, hence the representation is unique and
//! equality is coefficient-wise.

use super::rational::{factorial, Rational};
use crate::ExactError;
use num_traits::ToPrimitive;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

pub const SQRT_PI: f64 = 1.7724538509055160273;

#[derive(Clone, PartialEq, Eq)]
pub struct SqrtPiNumber {
    /// exponent of √π -> coefficient; zero coefficients are never stored.
    terms: BTreeMap<i32, Rational>,
}

impl SqrtPiNumber {
    pub fn zero() -> Self {
        SqrtPiNumber {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        SqrtPiNumber::monomial(Rational::one(), 0)
    }

    /// `c · (√π)^k`.
    pub fn monomial(c: Rational, k: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        SqrtPiNumber { terms }
    }

    pub fn from_rational(c: Rational) -> Self {
        SqrtPiNumber::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        SqrtPiNumber::from_rational(Rational::from_int(n))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of (√π)^k.
    pub fn coeff(&self, k: i32) -> Rational {
        self.terms.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Some(coefficient, exponent) when the value is a single term.
    pub fn as_monomial(&self) -> Option<(Rational, i32)> {
        if self.terms.len() == 1 {
            let (k, c) = self.terms.iter().next().unwrap();
            Some((c.clone(), *k))
        } else {
            None
        }
    }

    /// The rational value when no √π content is present.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else {
            self.as_monomial().and_then(|(c, k)| (k == 0).then_some(c))
        }
    }

    fn insert(&mut self, k: i32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return SqrtPiNumber::zero();
        }
        SqrtPiNumber {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Inverse of a single-term value; anything else has no Laurent inverse.
    pub fn recip(&self) -> Result<Self, ExactError> {
        match self.as_monomial() {
            Some((c, k)) if !c.is_zero() => Ok(SqrtPiNumber::monomial(c.recip(), -k)),
            _ => Err(ExactError::NonMonomialInverse(self.display())),
        }
    }

    pub fn div(&self, rhs: &SqrtPiNumber) -> Result<Self, ExactError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = SqrtPiNumber::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Float projection with √π ↦ 1.77245385090551603.
    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(&k, c)| c.to_f64() * SQRT_PI.powi(k))
            .sum::<f64>()
            + 0.0 // normalizes the empty sum's −0.0
    }

    /// Canonical rendering: terms `c*pi^(k/2)` in increasing exponent order.
    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut out = String::new();
        for (i, (&k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            if k == 0 {
                write!(out, "{c}").unwrap();
            } else if k % 2 == 0 {
                write!(out, "{}*pi^({})", c, k / 2).unwrap();
            } else {
                write!(out, "{c}*pi^({k}/2)").unwrap();
            }
        }
        out
    }
}

impl std::fmt::Debug for SqrtPiNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl std::fmt::Display for SqrtPiNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl Add for &SqrtPiNumber {
    type Output = SqrtPiNumber;
    fn add(self, rhs: &SqrtPiNumber) -> SqrtPiNumber {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.insert(k, c.clone());
        }
        out
    }
}

impl Sub for &SqrtPiNumber {
    type Output = SqrtPiNumber;
    fn sub(self, rhs: &SqrtPiNumber) -> SqrtPiNumber {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.insert(k, -c);
        }
        out
    }
}

impl Mul for &SqrtPiNumber {
    type Output = SqrtPiNumber;
    fn mul(self, rhs: &SqrtPiNumber) -> SqrtPiNumber {
        let mut out = SqrtPiNumber::zero();
        for (&j, a) in &self.terms {
            for (&k, b) in &rhs.terms {
                out.insert(j + k, a * b);
            }
        }
        out
    }
}

impl Neg for &SqrtPiNumber {
    type Output = SqrtPiNumber;
    fn neg(self) -> SqrtPiNumber {
        SqrtPiNumber {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

/// Γ(j/2) for odd or positive `j`, exactly.
///
/// Even j ≥ 2 gives the factorial (j/2 − 1)!. Odd j builds up or down from
/// Γ(1/2) = √π with Γ(z+1) = zΓ(z); negative odd j is reached by dividing
/// back down, e.g. Γ(−1/2) = −2√π. Non-positive even j is a pole.
pub fn gamma_half(j: i64) -> Result<SqrtPiNumber, ExactError> {
    if j.rem_euclid(2) == 0 {
        if j <= 0 {
            return Err(ExactError::GammaPole { two_z: j });
        }
        let f = factorial((j / 2 - 1) as u64);
        return Ok(SqrtPiNumber::from_rational(Rational::from_bigint(f)));
    }
    // odd j: z = j/2; walk between z and 1/2 with the functional equation
    let mut c = Rational::one();
    let mut two_z = j;
    while two_z > 1 {
        // Γ(z) = (z-1)·Γ(z-1)
        c *= Rational::new(two_z - 2, 2);
        two_z -= 2;
    }
    while two_z < 1 {
        // Γ(z) = Γ(z+1)/z
        c = c / Rational::new(two_z, 2);
        two_z += 2;
    }
    Ok(SqrtPiNumber::monomial(c, 1))
}

/// Residue of Γ at the non-positive integer −n: (−1)^n / n!.
pub fn gamma_residue_at(neg_n: i64) -> Rational {
    assert!(neg_n <= 0);
    let n = (-neg_n) as u64;
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    Rational::from_int(sign) / Rational::from_bigint(factorial(n))
}

/// The Γ-ratio Γ(m/2) / (Γ(1/2) Γ((m+1)/2)), exactly.
///
/// For even m this carries a 1/π; for odd m it is rational.
pub fn beta_value(m: i64) -> Result<SqrtPiNumber, ExactError> {
    if m < 4 {
        return Err(ExactError::DimensionTooSmall { m });
    }
    let num = gamma_half(m)?;
    let den = &gamma_half(1)? * &gamma_half(m + 1)?;
    num.div(&den)
}

/// Float Γ(j/2) via the same recursion in f64, for projection cross-checks.
pub fn gamma_half_f64(j: i64) -> f64 {
    if j % 2 == 0 {
        assert!(j > 0);
        return factorial((j / 2 - 1) as u64).to_f64().unwrap();
    }
    let mut c = 1.0;
    let mut two_z = j;
    while two_z > 1 {
        c *= (two_z - 2) as f64 / 2.0;
        two_z -= 2;
    }
    while two_z < 1 {
        c /= two_z as f64 / 2.0;
        two_z += 2;
    }
    c * SQRT_PI
}
