//! The universal coefficient table for the third boundary heat-trace
//! coefficient: 22 constants d_0…d_21 weighting the geometric invariants and
//! 9 constants e_0…e_8 weighting the Θ-dependent ones, each an element of
//! `Q(m)[β]`.

use crate::exact::{CoeffExpr, Rational, RationalFunction};
use std::sync::OnceLock;

#[derive(Clone)]
pub struct CoefficientTable {
    pub d: Vec<CoeffExpr>,
    pub e: Vec<CoeffExpr>,
}

/// Constant n/d.
fn c(n: i64, d: i64) -> CoeffExpr {
    CoeffExpr::constant(Rational::new(n, d))
}

/// Polynomial in m, ascending coefficients.
fn p(coeffs: &[i64]) -> CoeffExpr {
    CoeffExpr::from_rf(RationalFunction::from_ints(coeffs, &[1]))
}

/// Reciprocal of a polynomial in m.
fn inv(coeffs: &[i64]) -> CoeffExpr {
    CoeffExpr::from_rf(RationalFunction::from_ints(&[1], coeffs))
}

fn beta() -> CoeffExpr {
    CoeffExpr::beta()
}

fn build() -> CoefficientTable {
    let one = CoeffExpr::one();
    let b = beta();
    // recurring denominators
    let m_minus_2 = inv(&[-2, 1]);
    let m_minus_1 = inv(&[-1, 1]);
    let m_minus_3 = inv(&[-3, 1]);

    let mut d = vec![CoeffExpr::zero(); 22];
    let mut e = vec![CoeffExpr::zero(); 9];

    // d0 = (1/32)(1 − β/(m−2))
    d[0] = &c(1, 32) * &(&one - &(&b * &m_minus_2));
    // d2 = (1/16)(5 − 2m + (7 − 8m + 2m²)/(m−2)·β)
    d[2] = &c(1, 16) * &(&p(&[5, -2]) + &(&(&p(&[7, -8, 2]) * &m_minus_2) * &b));
    // d3 = (1/(32(m−1)))(2m − 3 − (2m² − 6m + 5)/(m−2)·β)
    d[3] = &(&c(1, 32) * &m_minus_1) * &(&p(&[-3, 2]) - &(&(&p(&[5, -6, 2]) * &m_minus_2) * &b));
    // d5 = (1/(16(m−1)))(1 + (3 − 2m)/(m−2)·β)
    d[5] = &(&c(1, 16) * &m_minus_1) * &(&one + &(&(&p(&[3, -2]) * &m_minus_2) * &b));
    // d12 = −(1/48)((m−1)/(m−2)·β − 1)
    d[12] = &c(-1, 48) * &(&(&(&p(&[-1, 1]) * &m_minus_2) * &b) - &one);
    // d13 = (1/48)(1 − (4m−10)/(m−2)·β)
    d[13] = &c(1, 48) * &(&one - &(&(&p(&[-10, 4]) * &m_minus_2) * &b));
    // d16 = (17+5m)/(192(m+1)) + (23 − 2m − 4m²)/(48(m−2)(m+1))·β
    d[16] =
        &(&p(&[17, 5]) * &inv(&[192, 192])) + &(&(&p(&[23, -2, -4]) * &inv(&[-96, -48, 48])) * &b);
    // d17 = −(17+7m²)/(384(m²−1)) + (4m³ − 11m² + 5m − 1)/(48(m²−1)(m−2))·β
    d[17] = &(&(-&p(&[17, 0, 7])) * &inv(&[-384, 0, 384]))
        + &(&(&p(&[-1, 5, -11, 4]) * &inv(&[96, -48, -96, 48])) * &b);
    // d20 = (1/(8(m−3)))((5m−7)/8 − (5m−9)/3·β)
    d[20] = &(&c(1, 8) * &m_minus_3)
        * &(&(&p(&[-7, 5]) * &c(1, 8)) - &(&(&p(&[-9, 5]) * &c(1, 3)) * &b));
    // d21 = (m−1)/(16(m−3))·(−1 + 2β)
    d[21] = &(&(&p(&[-1, 1]) * &c(1, 16)) * &m_minus_3) * &(&(&c(2, 1) * &b) - &one);
    // e0 = β/(8(m−2))
    e[0] = &(&c(1, 8) * &m_minus_2) * &b;
    // e1 = β/(8(m−1)(m−2))
    e[1] = &(&(&c(1, 8) * &m_minus_1) * &m_minus_2) * &b;

    CoefficientTable { d, e }
}

/// The canonical table; constructed once and shared read-only.
pub fn coefficient_table() -> &'static CoefficientTable {
    static TABLE: OnceLock<CoefficientTable> = OnceLock::new();
    TABLE.get_or_init(build)
}

impl CoefficientTable {
    /// A copy with `d_index += 1`, as a negative control for the relation
    /// verifier and report plumbing.
    pub fn tampered(index: usize) -> CoefficientTable {
        let mut t = coefficient_table().clone();
        let one = CoeffExpr::one();
        if index < t.d.len() {
            t.d[index] = &t.d[index] + &one;
        } else {
            let j = index - t.d.len();
            t.e[j] = &t.e[j] + &one;
        }
        t
    }
}
