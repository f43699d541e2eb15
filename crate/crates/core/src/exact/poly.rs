//! Dense univariate polynomials over the exact rationals.
//!
//! Coefficients are stored in ascending degree order. The representation is
//! canonical: the vector is empty for the zero polynomial and the last entry
//! is nonzero otherwise, so `degree()` of the zero polynomial is `None`.
//! The indeterminate is contextual (m, t, or a depending on the caller);
//! rendering takes the variable name as an argument.

use super::rational::Rational;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Poly { coeffs: vec![c] };
        p.normalize();
        p
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Poly {
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    /// `c * x^deg`.
    pub fn monomial(c: Rational, deg: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    /// Ascending-degree integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64();
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Rational::from_int(i as i64))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> Poly {
        let mut coeffs = vec![Rational::zero()];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / &Rational::from_int(i as i64 + 1));
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division: `self = q * rhs + r` with deg r < deg rhs.
    pub fn div_rem(&self, rhs: &Poly) -> (Poly, Poly) {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quo = Poly::zero();
        let dd = rhs.degree().unwrap();
        let lead = rhs.leading_coeff().unwrap().clone();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let c = rem.leading_coeff().unwrap() / &lead;
            let t = Poly::monomial(c, dr - dd);
            rem = &rem - &(&t * rhs);
            quo = &quo + &t;
        }
        (quo, rem)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, rhs: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if let Some(lc) = a.leading_coeff() {
            let inv = lc.recip();
            a = a.scale(&inv);
        }
        a
    }

    /// Render with the given variable name, ascending powers.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut out = String::new();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let lead = first;
            first = false;
            if !lead {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let mag = if lead { c.clone() } else { c.abs() };
            match i {
                0 => write!(out, "{mag}").unwrap(),
                1 if mag.is_one() => write!(out, "{var}").unwrap(),
                1 => write!(out, "{mag}*{var}").unwrap(),
                _ if mag.is_one() => write!(out, "{var}^{i}").unwrap(),
                _ => write!(out, "{mag}*{var}^{i}").unwrap(),
            }
        }
        out
    }
}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display("x"))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_degree_sentinel() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::from_ints(&[0, 0, 0]).degree(), None);
        assert_eq!(Poly::from_ints(&[1, 0, 2]).degree(), Some(2));
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = &Poly::from_ints(&[1, 1]) - &Poly::from_ints(&[0, 1]);
        assert_eq!(p, Poly::one());
        assert_eq!(p.degree(), Some(0));
    }

    #[test]
    fn division_and_gcd() {
        // (m^2 - 4) / (m - 2) = m + 2
        let num = Poly::from_ints(&[-4, 0, 1]);
        let den = Poly::from_ints(&[-2, 1]);
        let (q, r) = num.div_rem(&den);
        assert_eq!(q, Poly::from_ints(&[2, 1]));
        assert!(r.is_zero());
        // gcd(m^2-4, m^2-4m+4) = m - 2 (monic)
        let g = num.gcd(&Poly::from_ints(&[4, -4, 1]));
        assert_eq!(g, den);
    }

    #[test]
    fn calculus() {
        let p = Poly::from_ints(&[1, 0, 3]); // 1 + 3x^2
        assert_eq!(p.derivative(), Poly::from_ints(&[0, 6]));
        assert_eq!(
            p.integral(),
            Poly::from_coeffs(vec![
                Rational::zero(),
                Rational::one(),
                Rational::zero(),
                Rational::one(),
            ])
        );
        assert_eq!(p.eval(&Rational::new(1, 2)), Rational::new(7, 4));
    }
}
