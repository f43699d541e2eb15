//! Recursive construction of gamma matrices over the Gaussian rationals.
//!
//! All generators are skew-Hermitian unitaries squaring to −I and pairwise
//! anticommuting, so the defining relations
//! (γ^μ)*γ^ν + (γ^ν)*γ^μ = 2δ^{μν} hold exactly, with entries in {0, ±1, ±i}.
//! The doubling step builds dimension n from n−1:
//!
//! ```text
//! γ_a(n) = [[0,  i·γ_a(n−1)], [−i·γ_a(n−1), 0]],
//! γ_n(n) = [[0,  i·1], [i·1, 0]],
//! ```
//!
//! and odd dimensions append the (suitably scaled) product of all previous
//! generators as a chirality element.

use crate::exact::GaussRational;
use crate::matrix::Matrix;
use crate::InvariantError;

/// Gamma matrices for an even dimension m ≥ 4, of size 2^{m/2}, possibly
/// tensored with an identity factor for auxiliary bundles.
#[derive(Clone)]
pub struct CliffordRep {
    pub m: i64,
    gammas: Vec<Matrix>,
    gamma_tangential: Vec<Matrix>,
}

fn block(upper_right: &Matrix, lower_left: &Matrix) -> Matrix {
    let n = upper_right.dim();
    Matrix::from_fn(2 * n, |r, c| {
        if r < n && c >= n {
            upper_right[(r, c - n)].clone()
        } else if r >= n && c < n {
            lower_left[(r - n, c)].clone()
        } else {
            GaussRational::zero()
        }
    })
}

/// Skew-Hermitian anticommuting generators for dimension `dim` (any dim ≥ 1).
fn generators(dim: usize) -> Vec<Matrix> {
    if dim == 1 {
        return vec![Matrix::scalar(1, GaussRational::i())];
    }
    let prev = generators(dim - 1);
    if dim.is_multiple_of(2) {
        let i = GaussRational::i();
        let mut out: Vec<Matrix> = prev
            .iter()
            .map(|g| block(&g.scale(&i), &g.scale(&(-&i))))
            .collect();
        let id = Matrix::identity(prev[0].dim()).scale(&i);
        out.push(block(&id, &id));
        out
    } else {
        // append the chirality element to the even-dimensional family
        let mut out = prev.clone();
        let mut prod = prev[0].clone();
        for g in &prev[1..] {
            prod = &prod * g;
        }
        let k = (dim - 1) / 2;
        let chi = if k.is_multiple_of(2) {
            prod.scale(&GaussRational::i())
        } else {
            prod
        };
        out.push(chi);
        out
    }
}

/// The standard representation in even dimension m ≥ 4.
pub fn clifford_rep(m: i64) -> Result<CliffordRep, InvariantError> {
    if m < 4 || m % 2 != 0 {
        return Err(InvariantError::BadDimension { m });
    }
    Ok(CliffordRep::from_gammas(m, generators(m as usize)))
}

impl CliffordRep {
    fn from_gammas(m: i64, gammas: Vec<Matrix>) -> Self {
        // γ_m is unitary, so its inverse is its adjoint
        let gm_inv = gammas.last().unwrap().adjoint();
        let gamma_tangential = gammas[..gammas.len() - 1]
            .iter()
            .map(|g| &gm_inv * g)
            .collect();
        CliffordRep {
            m,
            gammas,
            gamma_tangential,
        }
    }

    /// Fiber dimension of the representation.
    pub fn dim(&self) -> usize {
        self.gammas[0].dim()
    }

    /// γ_i for i in 0..m (the normal direction is the last index).
    pub fn gamma(&self, i: usize) -> &Matrix {
        &self.gammas[i]
    }

    pub fn gamma_m(&self) -> &Matrix {
        self.gammas.last().unwrap()
    }

    pub fn gamma_m_inv(&self) -> Matrix {
        self.gamma_m().adjoint()
    }

    /// γ_a^T = γ_m^{−1} γ_a for tangential a in 0..m−1.
    pub fn gamma_t(&self, a: usize) -> &Matrix {
        &self.gamma_tangential[a]
    }

    /// Tensor with an identity factor: the same Clifford structure acting on
    /// a bundle enlarged by a trivial factor of dimension k.
    pub fn tensor_identity(&self, k: usize) -> CliffordRep {
        let id = Matrix::identity(k);
        CliffordRep::from_gammas(self.m, self.gammas.iter().map(|g| g.kron(&id)).collect())
    }

    /// Check the defining relations exactly.
    pub fn validate(&self) -> Result<(), InvariantError> {
        let n = self.dim();
        let m = self.m as usize;
        let two_id = Matrix::identity(n).scale(&GaussRational::from_int(2));
        for i in 0..m {
            for j in i..m {
                let s = &(&self.gammas[i].adjoint() * &self.gammas[j])
                    + &(&self.gammas[j].adjoint() * &self.gammas[i]);
                let want = if i == j {
                    two_id.clone()
                } else {
                    Matrix::zero(n)
                };
                if s != want {
                    return Err(InvariantError::DimensionMismatch {
                        expected: i,
                        got: j,
                        context: "Clifford relation violated",
                    });
                }
            }
        }
        for a in 0..m - 1 {
            let gt = self.gamma_t(a);
            if gt.adjoint() != -gt {
                return Err(InvariantError::DimensionMismatch {
                    expected: a,
                    got: a,
                    context: "tangential generator not skew-Hermitian",
                });
            }
        }
        Ok(())
    }
}
