//! Exact Gaussian rationals `re + im·i`.

use super::rational::Rational;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// A complex number with exact rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    pub fn zero() -> Self {
        GaussRational::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        GaussRational::new(Rational::one(), Rational::zero())
    }

    pub fn i() -> Self {
        GaussRational::new(Rational::zero(), Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        GaussRational::new(r, Rational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        GaussRational::from_rational(Rational::from_int(n))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        GaussRational::new(self.re.clone(), -&self.im)
    }

    pub fn to_c64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: GaussRational) -> GaussRational {
        GaussRational::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Add for &GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl AddAssign for GaussRational {
    fn add_assign(&mut self, rhs: GaussRational) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl Sub for GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: GaussRational) -> GaussRational {
        GaussRational::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Sub for &GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: GaussRational) -> GaussRational {
        (&self).mul(&rhs)
    }
}

impl Mul for &GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Mul<&Rational> for &GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &Rational) -> GaussRational {
        GaussRational::new(&self.re * rhs, &self.im * rhs)
    }
}

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-&self.re, -&self.im)
    }
}
