//! Small dense square matrices over the Gaussian rationals.
//!
//! Sizes stay tiny (2^{m/2}, optionally tensored with a small auxiliary
//! factor), so naive O(n³) products are more than adequate.

use crate::exact::{GaussRational, Rational};
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    data: Vec<GaussRational>,
}

impl Matrix {
    pub fn zero(n: usize) -> Self {
        Matrix {
            n,
            data: vec![GaussRational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n);
        for i in 0..n {
            m[(i, i)] = GaussRational::one();
        }
        m
    }

    pub fn scalar(n: usize, c: GaussRational) -> Self {
        let mut m = Matrix::zero(n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> GaussRational) -> Self {
        let mut m = Matrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|z| z.is_zero())
    }

    pub fn trace(&self) -> GaussRational {
        let mut t = GaussRational::zero();
        for i in 0..self.n {
            t += self[(i, i)].clone();
        }
        t
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Matrix {
        Matrix::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.n, |i, j| self[(j, i)].clone())
    }

    pub fn is_hermitian(&self) -> bool {
        *self == self.adjoint()
    }

    pub fn scale(&self, c: &GaussRational) -> Matrix {
        Matrix {
            n: self.n,
            data: self.data.iter().map(|z| z * c).collect(),
        }
    }

    pub fn scale_rat(&self, c: &Rational) -> Matrix {
        self.scale(&GaussRational::from_rational(c.clone()))
    }

    /// Kronecker product.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let n = self.n * rhs.n;
        Matrix::from_fn(n, |i, j| {
            &self[(i / rhs.n, j / rhs.n)] * &rhs[(i % rhs.n, j % rhs.n)]
        })
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = GaussRational;
    fn index(&self, (i, j): (usize, usize)) -> &GaussRational {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussRational {
        &mut self.data[i * self.n + j]
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        Matrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        Matrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        let n = self.n;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let p = a * &rhs[(k, j)];
                    out[(i, j)] += p;
                }
            }
        }
        out
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            n: self.n,
            data: self.data.iter().map(|z| -z).collect(),
        }
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.n {
            for j in 0..self.n {
                write!(f, "{}{}", if j > 0 { "\t" } else { "" }, self[(i, j)])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn i() -> GaussRational {
        GaussRational::i()
    }

    #[test]
    fn product_and_trace() {
        // [[0, i], [i, 0]]^2 = -I
        let mut g = Matrix::zero(2);
        g[(0, 1)] = i();
        g[(1, 0)] = i();
        let sq = &g * &g;
        assert_eq!(sq, Matrix::scalar(2, GaussRational::from_int(-1)));
        assert_eq!(sq.trace(), GaussRational::from_int(-2));
    }

    #[test]
    fn adjoint_of_product() {
        let a = Matrix::from_fn(2, |r, c| {
            GaussRational::new(
                Rational::from_int((r + 2 * c) as i64),
                Rational::from_int(r as i64 - c as i64),
            )
        });
        let b = Matrix::from_fn(2, |r, c| {
            GaussRational::new(Rational::new(1, 1 + r as i64 + c as i64), Rational::one())
        });
        assert_eq!((&a * &b).adjoint(), &b.adjoint() * &a.adjoint());
    }

    #[test]
    fn kron_identity() {
        let a = Matrix::from_fn(2, |r, c| GaussRational::from_int((r * 2 + c) as i64));
        let k = a.kron(&Matrix::identity(3));
        assert_eq!(k.dim(), 6);
        assert_eq!(k.trace(), a.trace().clone() * GaussRational::from_int(3));
    }
}
