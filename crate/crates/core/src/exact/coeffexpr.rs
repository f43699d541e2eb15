//! The coefficient ring `Q(m)[β]`: polynomials in the adjoined symbol β whose
//! coefficients are rational functions of the dimension m.
//!
//! β stands for the Γ-ratio Γ(m/2)/(Γ(1/2)Γ((m+1)/2)) but is treated as a
//! free transcendental: no relations beyond exponent arithmetic, so equality
//! of normalized coefficients decides equality of expressions. Substituting
//! a concrete even or odd m maps β to its exact √π-Laurent value.

use super::ratfunc::RationalFunction;
use super::rational::Rational;
use super::sqrtpi::{beta_value, SqrtPiNumber};
use crate::ExactError;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct CoeffExpr {
    /// β-exponent -> coefficient in Q(m); zero coefficients never stored.
    terms: BTreeMap<u32, RationalFunction>,
}

impl CoeffExpr {
    pub fn zero() -> Self {
        CoeffExpr {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        CoeffExpr::from_rf(RationalFunction::one())
    }

    /// The symbol β itself.
    pub fn beta() -> Self {
        CoeffExpr::term(1, RationalFunction::one())
    }

    pub fn from_rf(rf: RationalFunction) -> Self {
        CoeffExpr::term(0, rf)
    }

    pub fn constant(c: Rational) -> Self {
        CoeffExpr::from_rf(RationalFunction::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        CoeffExpr::constant(Rational::from_int(n))
    }

    /// `rf(m) · β^k`.
    pub fn term(beta_pow: u32, rf: RationalFunction) -> Self {
        let mut terms = BTreeMap::new();
        if !rf.is_zero() {
            terms.insert(beta_pow, rf);
        }
        CoeffExpr { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff_of_beta(&self, k: u32) -> RationalFunction {
        self.terms
            .get(&k)
            .cloned()
            .unwrap_or_else(RationalFunction::zero)
    }

    pub fn beta_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    fn insert(&mut self, k: u32, rf: RationalFunction) {
        if rf.is_zero() {
            return;
        }
        match self.terms.remove(&k) {
            None => {
                self.terms.insert(k, rf);
            }
            Some(old) => {
                let sum = &old + &rf;
                if !sum.is_zero() {
                    self.terms.insert(k, sum);
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self * &CoeffExpr::constant(c.clone())
    }

    /// Substitute m ↦ m₀ and β ↦ β(m₀), exactly.
    pub fn eval(&self, m: i64) -> Result<SqrtPiNumber, ExactError> {
        let beta = beta_value(m)?;
        let m_rat = Rational::from_int(m);
        let mut acc = SqrtPiNumber::zero();
        for (&k, rf) in &self.terms {
            let c = rf.eval(&m_rat)?;
            acc = &acc + &beta.pow(k).scale(&c);
        }
        Ok(acc)
    }

    /// Substitute only m ↦ m₀, keeping β symbolic: returns the coefficients
    /// (β-exponent, rational value) in increasing exponent order.
    pub fn eval_m(&self, m: i64) -> Result<Vec<(u32, Rational)>, ExactError> {
        let m_rat = Rational::from_int(m);
        let mut out = Vec::new();
        for (&k, rf) in &self.terms {
            let c = rf.eval(&m_rat)?;
            if !c.is_zero() {
                out.push((k, c));
            }
        }
        Ok(out)
    }

    /// Canonical rendering: `p(m)/q(m)·β^k` terms in increasing β order.
    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut parts = Vec::new();
        for (&k, rf) in &self.terms {
            let body = rf.display();
            let part = match k {
                0 => body,
                1 => format!("{body}*b"),
                _ => format!("{body}*b^{k}"),
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

impl std::fmt::Debug for CoeffExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl std::fmt::Display for CoeffExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl Add for &CoeffExpr {
    type Output = CoeffExpr;
    fn add(self, rhs: &CoeffExpr) -> CoeffExpr {
        let mut out = self.clone();
        for (&k, rf) in &rhs.terms {
            out.insert(k, rf.clone());
        }
        out
    }
}

impl Sub for &CoeffExpr {
    type Output = CoeffExpr;
    fn sub(self, rhs: &CoeffExpr) -> CoeffExpr {
        let mut out = self.clone();
        for (&k, rf) in &rhs.terms {
            out.insert(k, -rf);
        }
        out
    }
}

impl Mul for &CoeffExpr {
    type Output = CoeffExpr;
    fn mul(self, rhs: &CoeffExpr) -> CoeffExpr {
        let mut out = CoeffExpr::zero();
        for (&j, a) in &self.terms {
            for (&k, b) in &rhs.terms {
                out.insert(j + k, a * b);
            }
        }
        out
    }
}

impl Neg for &CoeffExpr {
    type Output = CoeffExpr;
    fn neg(self) -> CoeffExpr {
        CoeffExpr {
            terms: self.terms.iter().map(|(&k, rf)| (k, -rf)).collect(),
        }
    }
}
