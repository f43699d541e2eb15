//! Rational functions of the dimension variable m.
//!
//! Canonical form: gcd(numerator, denominator) = 1 and the denominator is
//! monic, so structural equality is semantic equality.

use super::poly::Poly;
use super::rational::Rational;
use crate::ExactError;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator polynomial");
        let mut rf = RationalFunction { num, den };
        rf.normalize();
        rf
    }

    /// Integer-coefficient convenience constructor (ascending powers of m).
    pub fn from_ints(num: &[i64], den: &[i64]) -> Self {
        RationalFunction::new(Poly::from_ints(num), Poly::from_ints(den))
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RationalFunction {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunction {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree() != Some(0) {
            let (qn, rn) = self.num.div_rem(&g);
            let (qd, rd) = self.den.div_rem(&g);
            debug_assert!(rn.is_zero() && rd.is_zero());
            self.num = qn;
            self.den = qd;
        }
        let lc = self.den.leading_coeff().unwrap().recip();
        self.num = self.num.scale(&lc);
        self.den = self.den.scale(&lc);
    }

    /// Evaluate at a concrete m; fails when the denominator vanishes there.
    pub fn eval(&self, m: &Rational) -> Result<Rational, ExactError> {
        let d = self.den.eval(m);
        if d.is_zero() {
            return Err(ExactError::PoleAt {
                m: m.to_string(),
                expr: self.display(),
            });
        }
        Ok(self.num.eval(m) / d)
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "inverting zero rational function");
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn display(&self) -> String {
        if self.den == Poly::one() {
            format!("({})", self.num.display("m"))
        } else {
            format!("({})/({})", self.num.display("m"), self.den.display("m"))
        }
    }
}

impl std::fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}
