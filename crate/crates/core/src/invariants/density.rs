//! Boundary density evaluators over concrete Clifford/geometry data.
//!
//! Densities are exact: traces of Gaussian-rational matrix products weighted
//! by table coefficients with β kept symbolic, so every cross-check is an
//! exact equality. The dimensional prefactors (4π)^{−m/2} or
//! (4π)^{−(m−1)/2} and the boundary volume are applied at reporting time,
//! never here.

use super::clifford::CliffordRep;
use super::table::{coefficient_table, CoefficientTable};
use crate::exact::{beta_value, CoeffExpr, GaussRational, Rational, SqrtPiNumber};
use crate::matrix::Matrix;
use crate::InvariantError;
use std::collections::BTreeMap;

/// An exact density: Σ c_{j,k} β^j (√π)^k with Gaussian-rational c_{j,k}.
///
/// Third-coefficient densities only populate (j, 0) terms and are linear in
/// β; the second coefficient's boundary terms carry (√π)² = π content.
#[derive(Clone, PartialEq, Eq)]
pub struct DensityValue {
    pub m: i64,
    terms: BTreeMap<(u32, i32), GaussRational>,
}

impl DensityValue {
    pub fn zero(m: i64) -> Self {
        DensityValue {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, beta_pow: u32, sqrtpi_pow: i32, c: GaussRational) {
        if c.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry((beta_pow, sqrtpi_pow))
            .or_insert_with(GaussRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(beta_pow, sqrtpi_pow));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(|c| c.is_real())
    }

    pub fn coeff(&self, beta_pow: u32, sqrtpi_pow: i32) -> GaussRational {
        self.terms
            .get(&(beta_pow, sqrtpi_pow))
            .cloned()
            .unwrap_or_else(GaussRational::zero)
    }

    /// Substitute β ↦ β(m); requires a real value.
    pub fn to_sqrtpi(&self) -> Result<SqrtPiNumber, InvariantError> {
        if !self.is_real() {
            return Err(InvariantError::NonRealDensity(self.display()));
        }
        let beta = beta_value(self.m)?;
        let mut acc = SqrtPiNumber::zero();
        for (&(j, k), c) in &self.terms {
            let t = &beta.pow(j) * &SqrtPiNumber::monomial(c.re.clone(), k);
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Float projection with β ↦ β(m) and √π ↦ 1.7724….
    pub fn to_f64(&self) -> f64 {
        let beta = match beta_value(self.m) {
            Ok(b) => b.to_f64(),
            Err(_) => f64::NAN,
        };
        self.terms
            .iter()
            .map(|(&(j, k), c)| c.re.to_f64() * beta.powi(j as i32) * crate::exact::SQRT_PI.powi(k))
            .sum::<f64>()
            + 0.0
    }

    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut parts = Vec::new();
        for (&(j, k), c) in &self.terms {
            let mut s = format!("({c})");
            if j == 1 {
                s.push_str("*b");
            } else if j > 1 {
                s.push_str(&format!("*b^{j}"));
            }
            if k != 0 {
                if k % 2 == 0 {
                    s.push_str(&format!("*pi^({})", k / 2));
                } else {
                    s.push_str(&format!("*pi^({k}/2)"));
                }
            }
            parts.push(s);
        }
        parts.join(" + ")
    }
}

impl std::fmt::Debug for DensityValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display())
    }
}

/// Concrete boundary data feeding the density evaluators. Matrices live in
/// the representation space of `rep`; the second fundamental form, scalar
/// curvatures, and the localizing function values are exact scalars.
#[derive(Clone)]
pub struct BoundaryGeometryData {
    pub rep: CliffordRep,
    /// ψ, the zeroth-order part of the operator at the boundary point.
    pub psi: Matrix,
    /// Θ, the self-adjoint shift of the tangential operator.
    pub theta: Matrix,
    /// second fundamental form L_ab, symmetric (m−1)×(m−1).
    pub l: Vec<Vec<Rational>>,
    /// scalar curvature τ.
    pub tau: Rational,
    /// normal-normal Ricci component ρ_mm.
    pub rho_mm: Rational,
    /// optional curvature-twist data W_ab (antisymmetric family) and W_am.
    pub w_ab: Option<Vec<Vec<Matrix>>>,
    pub w_am: Option<Vec<Matrix>>,
    /// localizing function and its normal derivatives at the point.
    pub f: Rational,
    pub f_m: Rational,
    pub f_mm: Rational,
    /// endomorphism E for the interior part of the second coefficient.
    pub e_endo: Matrix,
    /// formal slots for covariant-derivative invariants (zero weight in the
    /// canonical table; kept so the full basis can be evaluated).
    pub psi_hat_m: Option<Matrix>,
    pub psi_hat_tan: Option<Vec<Matrix>>,
    pub theta_tan: Option<Vec<Matrix>>,
}

impl BoundaryGeometryData {
    /// All-zero data with F = 1.
    pub fn zeroed(rep: CliffordRep) -> Self {
        let n = rep.dim();
        let t = (rep.m - 1) as usize;
        BoundaryGeometryData {
            rep,
            psi: Matrix::zero(n),
            theta: Matrix::zero(n),
            l: vec![vec![Rational::zero(); t]; t],
            tau: Rational::zero(),
            rho_mm: Rational::zero(),
            w_ab: None,
            w_am: None,
            f: Rational::one(),
            f_m: Rational::zero(),
            f_mm: Rational::zero(),
            e_endo: Matrix::zero(n),
            psi_hat_m: None,
            psi_hat_tan: None,
            theta_tan: None,
        }
    }

    /// Unit-ball boundary data: flat interior, L_ab = δ_ab, ψ = 0,
    /// Θ = (m−1)/2 · I, with the given localizing values.
    pub fn ball(rep: CliffordRep, f: Rational, f_m: Rational, f_mm: Rational) -> Self {
        let m = rep.m;
        let n = rep.dim();
        let t = (m - 1) as usize;
        let mut data = BoundaryGeometryData::zeroed(rep);
        for a in 0..t {
            data.l[a][a] = Rational::one();
        }
        data.theta = Matrix::scalar(n, GaussRational::from_rational(Rational::new(m - 1, 2)));
        data.f = f;
        data.f_m = f_m;
        data.f_mm = f_mm;
        data
    }

    fn l_trace(&self) -> Rational {
        let mut acc = Rational::zero();
        for (a, row) in self.l.iter().enumerate() {
            acc += row[a].clone();
        }
        acc
    }

    fn l_square(&self) -> Rational {
        let mut acc = Rational::zero();
        for row in &self.l {
            for v in row {
                acc += v * v;
            }
        }
        acc
    }

    fn check(&self) -> Result<(), InvariantError> {
        let n = self.rep.dim();
        let t = (self.rep.m - 1) as usize;
        for (name, mat) in [
            ("psi", &self.psi),
            ("theta", &self.theta),
            ("E", &self.e_endo),
        ] {
            if mat.dim() != n {
                return Err(InvariantError::DimensionMismatch {
                    expected: n,
                    got: mat.dim(),
                    context: name,
                });
            }
        }
        if self.l.len() != t || self.l.iter().any(|r| r.len() != t) {
            return Err(InvariantError::DimensionMismatch {
                expected: t,
                got: self.l.len(),
                context: "second fundamental form",
            });
        }
        Ok(())
    }
}

/// Σ_a γ_a^T X γ_a^T Y.
fn sandwich(rep: &CliffordRep, x: &Matrix, y: &Matrix) -> Matrix {
    let mut acc = Matrix::zero(rep.dim());
    for a in 0..(rep.m - 1) as usize {
        let g = rep.gamma_t(a);
        acc = &acc + &(&(&(g * x) * g) * y);
    }
    acc
}

struct Accumulator {
    value: DensityValue,
}

impl Accumulator {
    fn new(m: i64) -> Self {
        Accumulator {
            value: DensityValue::zero(m),
        }
    }

    /// value += coeff(m; β symbolic) · trace · smear
    fn add(
        &mut self,
        coeff: &CoeffExpr,
        trace: GaussRational,
        smear: &Rational,
    ) -> Result<(), InvariantError> {
        if trace.is_zero() || smear.is_zero() {
            return Ok(());
        }
        for (k, c) in coeff.eval_m(self.value.m)? {
            self.value.add_term(k, 0, &trace * &(c * smear.clone()));
        }
        Ok(())
    }
}

/// The full third-coefficient boundary density for the given data, with the
/// canonical coefficient table.
pub fn a3_density(data: &BoundaryGeometryData) -> Result<DensityValue, InvariantError> {
    a3_density_with(coefficient_table(), data)
}

/// Same, with a caller-supplied table (regression harness for alternative
/// coefficient sets; all 22 + 9 basis slots are evaluated, including the
/// zero-weight ones).
pub fn a3_density_with(
    table: &CoefficientTable,
    data: &BoundaryGeometryData,
) -> Result<DensityValue, InvariantError> {
    data.check()?;
    let rep = &data.rep;
    let m = rep.m;
    let n = rep.dim();
    let gm_inv = rep.gamma_m_inv();

    let psi_hat = &gm_inv * &data.psi;
    let psi_hat_star = psi_hat.adjoint();
    let zero = Matrix::zero(n);
    let psi_hat_m = data.psi_hat_m.clone().unwrap_or_else(|| zero.clone());
    let psi_hat_m_star = psi_hat_m.adjoint();

    let id_trace = GaussRational::from_int(n as i64);
    let l_aa = data.l_trace();
    let l_sq = data.l_square();

    let tr = |mat: &Matrix| mat.trace();
    let plus = &psi_hat + &psi_hat_star;
    let minus = &psi_hat - &psi_hat_star;

    let mut acc = Accumulator::new(m);
    let f = data.f.clone();
    let d = &table.d;
    let e = &table.e;

    // F-weighted ψ-quadratic invariants
    acc.add(
        &d[0],
        tr(&(&(&psi_hat * &psi_hat) + &(&psi_hat_star * &psi_hat_star))),
        &f,
    )?;
    acc.add(
        &d[1],
        tr(&(&(&psi_hat * &psi_hat) - &(&psi_hat_star * &psi_hat_star))),
        &f,
    )?;
    acc.add(&d[2], tr(&(&psi_hat_star * &psi_hat)), &f)?;
    acc.add(
        &d[3],
        tr(&(&sandwich(rep, &psi_hat, &psi_hat) + &sandwich(rep, &psi_hat_star, &psi_hat_star))),
        &f,
    )?;
    acc.add(
        &d[4],
        tr(&(&sandwich(rep, &psi_hat, &psi_hat) - &sandwich(rep, &psi_hat_star, &psi_hat_star))),
        &f,
    )?;
    acc.add(&d[5], tr(&sandwich(rep, &psi_hat_star, &psi_hat)), &f)?;

    // derivative slots
    acc.add(&d[6], tr(&(&psi_hat_m + &psi_hat_m_star)), &f)?;
    acc.add(&d[7], tr(&(&psi_hat_m - &psi_hat_m_star)), &f)?;
    if let Some(slots) = &data.psi_hat_tan {
        let mut s_plus = Matrix::zero(n);
        let mut s_minus = Matrix::zero(n);
        for (a, sl) in slots.iter().enumerate() {
            let g = rep.gamma_t(a);
            s_plus = &s_plus + &(g * &(sl + &sl.adjoint()));
            s_minus = &s_minus + &(g * &(sl - &sl.adjoint()));
        }
        acc.add(&d[8], tr(&s_plus), &f)?;
        acc.add(&d[9], tr(&s_minus), &f)?;
    }

    // extrinsic and curvature scalars
    acc.add(&d[10], tr(&plus), &(l_aa.clone() * f.clone()))?;
    acc.add(&d[11], tr(&minus), &(l_aa.clone() * f.clone()))?;
    acc.add(&d[12], id_trace.clone(), &(data.tau.clone() * f.clone()))?;
    acc.add(&d[13], id_trace.clone(), &(data.rho_mm.clone() * f.clone()))?;

    if let Some(w) = &data.w_ab {
        let mut s = Matrix::zero(n);
        for a in 0..(m - 1) as usize {
            for b in 0..(m - 1) as usize {
                s = &s + &(&(&w[a][b] * rep.gamma_t(a)) * rep.gamma_t(b));
            }
        }
        acc.add(&d[14], tr(&s), &f)?;
    }
    if let Some(w) = &data.w_am {
        let mut s = Matrix::zero(n);
        for (a, wm) in w.iter().enumerate() {
            s = &s + &(wm * rep.gamma_t(a));
        }
        acc.add(&d[15], tr(&s), &f)?;
    }

    acc.add(&d[16], id_trace.clone(), &(l_sq * f.clone()))?;
    acc.add(
        &d[17],
        id_trace.clone(),
        &(l_aa.clone() * l_aa.clone() * f.clone()),
    )?;

    // normal derivatives of the localizing function
    acc.add(&d[18], tr(&plus), &data.f_m)?;
    acc.add(&d[19], tr(&minus), &data.f_m)?;
    acc.add(&d[20], id_trace.clone(), &(l_aa.clone() * data.f_m.clone()))?;
    acc.add(&d[21], id_trace.clone(), &data.f_mm)?;

    // Θ-dependent invariants
    let theta = &data.theta;
    acc.add(&e[0], tr(&(theta * theta)), &f)?;
    acc.add(&e[1], tr(&sandwich(rep, theta, theta)), &f)?;
    if let Some(slots) = &data.theta_tan {
        let mut s = Matrix::zero(n);
        for (a, sl) in slots.iter().enumerate() {
            s = &s + &(rep.gamma_t(a) * sl);
        }
        acc.add(&e[2], tr(&s), &f)?;
    }
    acc.add(&e[3], tr(theta), &(l_aa * f.clone()))?;
    acc.add(&e[4], tr(&(theta * &plus)), &f)?;
    acc.add(&e[5], tr(&(theta * &minus)), &f)?;
    acc.add(&e[6], tr(&sandwich(rep, theta, &plus)), &f)?;
    acc.add(&e[7], tr(&sandwich(rep, theta, &minus)), &f)?;
    acc.add(&e[8], tr(theta), &data.f_m)?;

    Ok(acc.value)
}

/// Interior density of the zeroth coefficient: Tr{F} per unit volume.
pub fn a0_density(data: &BoundaryGeometryData) -> Result<DensityValue, InvariantError> {
    data.check()?;
    let mut v = DensityValue::zero(data.rep.m);
    v.add_term(
        0,
        0,
        GaussRational::from_rational(data.f.clone() * Rational::from_int(data.rep.dim() as i64)),
    );
    Ok(v)
}

/// The scalar coefficient (β − 1)/4 multiplying Tr{F} in the first boundary
/// coefficient. Exposed separately so it can be evaluated at odd m too.
pub fn a1_boundary_coefficient() -> CoeffExpr {
    let quarter = CoeffExpr::constant(Rational::new(1, 4));
    &quarter * &(&CoeffExpr::beta() - &CoeffExpr::one())
}

/// Boundary density of the first coefficient: (β−1)/4 · Tr{F}.
pub fn a1_density(data: &BoundaryGeometryData) -> Result<DensityValue, InvariantError> {
    data.check()?;
    let mut acc = Accumulator::new(data.rep.m);
    acc.add(
        &a1_boundary_coefficient(),
        GaussRational::from_int(data.rep.dim() as i64),
        &data.f,
    )?;
    Ok(acc.value)
}

/// Interior and boundary densities of the second coefficient.
pub struct A2Density {
    pub interior: DensityValue,
    pub boundary: DensityValue,
}

/// Second coefficient: interior (1/6)Tr{F(τ + 6E)} and boundary
/// (1/2)Tr{(ψ̂+ψ̂*)F} + (1/3)(1 − (3/4)πβ)L_aa Tr{F}
/// − (m−1)/(2(m−2))(1 − (1/2)πβ)Tr{F_{;m}}; π enters exactly as (√π)².
pub fn a2_density(data: &BoundaryGeometryData) -> Result<A2Density, InvariantError> {
    data.check()?;
    let rep = &data.rep;
    let m = rep.m;
    let n = rep.dim();
    let id_trace = Rational::from_int(n as i64);

    let mut interior = DensityValue::zero(m);
    interior.add_term(
        0,
        0,
        GaussRational::from_rational(
            data.tau.clone() * data.f.clone() * id_trace.clone() * Rational::new(1, 6),
        ),
    );
    interior.add_term(
        0,
        0,
        &data.e_endo.trace() * &GaussRational::from_rational(data.f.clone()),
    );

    let mut boundary = DensityValue::zero(m);
    let gm_inv = rep.gamma_m_inv();
    let psi_hat = &gm_inv * &data.psi;
    let plus = &psi_hat + &psi_hat.adjoint();
    boundary.add_term(
        0,
        0,
        &plus.trace() * &GaussRational::from_rational(data.f.clone() * Rational::new(1, 2)),
    );
    let l_aa = data.l_trace();
    // (1/3)(1 − (3/4)πβ) L_aa Tr{F}
    let lf = l_aa * data.f.clone() * id_trace.clone();
    boundary.add_term(
        0,
        0,
        GaussRational::from_rational(lf.clone() * Rational::new(1, 3)),
    );
    boundary.add_term(
        1,
        2,
        GaussRational::from_rational(lf * Rational::new(-1, 4)),
    );
    // −(m−1)/(2(m−2)) (1 − (1/2)πβ) Tr{F_{;m}}
    let fmtr = data.f_m.clone() * id_trace;
    let front = Rational::new(-(m - 1), 2 * (m - 2));
    boundary.add_term(
        0,
        0,
        GaussRational::from_rational(fmtr.clone() * front.clone()),
    );
    boundary.add_term(
        1,
        2,
        GaussRational::from_rational(fmtr * front * Rational::new(-1, 2)),
    );

    Ok(A2Density { interior, boundary })
}

/// The boundary data of the formal adjoint problem: ψ ↦ ψ*,
/// Θ ↦ −γ_m Θ γ_m^{−1} + L_aa, all other fields unchanged.
pub fn adjoint_data(data: &BoundaryGeometryData) -> BoundaryGeometryData {
    let rep = &data.rep;
    let gm = rep.gamma_m();
    let gm_inv = rep.gamma_m_inv();
    let mut out = data.clone();
    out.psi = data.psi.adjoint();
    let conj = &(gm * &data.theta) * &gm_inv;
    let shift = Matrix::scalar(rep.dim(), GaussRational::from_rational(data.l_trace()));
    out.theta = &(-&conj) + &shift;
    out
}

/// Pointwise symbol data for reading off the connection 1-form and the
/// endomorphism of a Laplace-type operator
/// D = −(g^{μν}∂_μ∂_ν + a^μ∂_μ + b).
pub struct SymbolData {
    /// g_{μν} at the point (symmetric, invertible).
    pub metric: Vec<Vec<Rational>>,
    /// first-order coefficients a^ν.
    pub a: Vec<Matrix>,
    /// zeroth-order coefficient b.
    pub b: Matrix,
    /// Christoffel values Γ_{μσ}{}^ν, indexed `[μ][σ][ν]`.
    pub christoffel: Vec<Vec<Vec<Rational>>>,
    /// first derivatives ∂_ν ω_μ, indexed `[ν][μ]`.
    pub domega: Vec<Vec<Matrix>>,
}

impl SymbolData {
    /// Flat-space data: g = I, Γ = 0, ∂ω = 0.
    pub fn flat(dim: usize, a: Vec<Matrix>, b: Matrix) -> Self {
        let n = b.dim();
        SymbolData {
            metric: (0..dim)
                .map(|i| {
                    (0..dim)
                        .map(|j| {
                            if i == j {
                                Rational::one()
                            } else {
                                Rational::zero()
                            }
                        })
                        .collect()
                })
                .collect(),
            a,
            b,
            christoffel: vec![vec![vec![Rational::zero(); dim]; dim]; dim],
            domega: vec![vec![Matrix::zero(n); dim]; dim],
        }
    }
}

fn invert_rational(g: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>, InvariantError> {
    let n = g.len();
    let mut a: Vec<Vec<Rational>> = g.to_vec();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(InvariantError::SingularMetric)?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone().recip();
        for j in 0..n {
            a[col][j] = &a[col][j] * &p;
            inv[col][j] = &inv[col][j] * &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in 0..n {
                let t = &a[col][j] * &factor;
                a[r][j] -= t;
                let t = &inv[col][j] * &factor;
                inv[r][j] -= t;
            }
        }
    }
    Ok(inv)
}

/// Read off (ω, E) from pointwise symbol data:
/// ω_δ = ½ g_{νδ}(a^ν + g^{μσ}Γ_{μσ}{}^ν) and
/// E = b − g^{νμ}(∂_ν ω_μ + ω_ν ω_μ − ω_σ Γ_{νμ}{}^σ).
pub fn laplace_normal_form(sym: &SymbolData) -> Result<(Vec<Matrix>, Matrix), InvariantError> {
    let dim = sym.metric.len();
    let n = sym.b.dim();
    let g_inv = invert_rational(&sym.metric)?;

    let mut omega = Vec::with_capacity(dim);
    for delta in 0..dim {
        let mut acc = Matrix::zero(n);
        for nu in 0..dim {
            if sym.metric[nu][delta].is_zero() {
                continue;
            }
            let mut inner = sym.a[nu].clone();
            let mut tr = Rational::zero();
            for mu in 0..dim {
                for sigma in 0..dim {
                    tr += &g_inv[mu][sigma] * &sym.christoffel[mu][sigma][nu];
                }
            }
            inner = &inner + &Matrix::scalar(n, GaussRational::from_rational(tr));
            acc = &acc + &inner.scale_rat(&sym.metric[nu][delta]);
        }
        omega.push(acc.scale_rat(&Rational::new(1, 2)));
    }

    let mut e = sym.b.clone();
    for nu in 0..dim {
        for mu in 0..dim {
            if g_inv[nu][mu].is_zero() {
                continue;
            }
            let mut inner = &sym.domega[nu][mu] + &(&omega[nu] * &omega[mu]);
            for sigma in 0..dim {
                let t = omega[sigma].scale_rat(&sym.christoffel[nu][mu][sigma]);
                inner = &inner - &t;
            }
            e = &e - &inner.scale_rat(&g_inv[nu][mu]);
        }
    }
    Ok((omega, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::clifford::clifford_rep;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn zero_data_gives_zero() {
        let data = BoundaryGeometryData::zeroed(clifford_rep(4).unwrap());
        assert!(a3_density(&data).unwrap().is_zero());
    }

    #[test]
    fn identity_l_matches_table_combination() {
        // ψ=0, Θ=0, L=I: only d16·(m−1) + d17·(m−1)² survives, times Tr{I}
        let m = 4i64;
        let rep = clifford_rep(m).unwrap();
        let mut data = BoundaryGeometryData::zeroed(rep);
        for a in 0..3 {
            data.l[a][a] = Rational::one();
        }
        let got = a3_density(&data).unwrap();
        let t = coefficient_table();
        let want_expr = &t.d[16].scale(&q(3, 1)) + &t.d[17].scale(&q(9, 1));
        let mut want = DensityValue::zero(m);
        for (k, c) in want_expr.eval_m(m).unwrap() {
            want.add_term(k, 0, GaussRational::from_rational(c * q(4, 1)));
        }
        assert_eq!(got, want);
    }

    #[test]
    fn constant_theta_drops_out() {
        // Θ = c·I contributes (e0 − (m−1)e1)c²Tr{I} = 0
        for m in [4i64, 6] {
            let rep = clifford_rep(m).unwrap();
            let n = rep.dim();
            let mut data = BoundaryGeometryData::zeroed(rep);
            data.theta = Matrix::scalar(n, GaussRational::from_rational(q(7, 3)));
            assert!(a3_density(&data).unwrap().is_zero(), "m = {m}");
        }
    }

    #[test]
    fn hermitian_data_gives_real_density() {
        let rep = clifford_rep(4).unwrap();
        let n = rep.dim();
        let mut data = BoundaryGeometryData::zeroed(rep);
        // arbitrary ψ; Hermitian Θ
        data.psi = Matrix::from_fn(n, |r, c| {
            GaussRational::new(q(r as i64 + 1, 2), q(c as i64 - 1, 3))
        });
        let h = Matrix::from_fn(n, |r, c| {
            GaussRational::new(q((r + c) as i64, 5), q(r as i64 - c as i64, 7))
        });
        data.theta = &h + &h.adjoint();
        data.l[0][1] = q(1, 2);
        data.l[1][0] = q(1, 2);
        data.tau = q(3, 1);
        let v = a3_density(&data).unwrap();
        assert!(v.is_real(), "density must be real: {}", v.display());
    }

    #[test]
    fn a0_counts_fiber_dimension() {
        let data = BoundaryGeometryData::zeroed(clifford_rep(4).unwrap());
        let v = a0_density(&data).unwrap();
        assert_eq!(v.coeff(0, 0), GaussRational::from_int(4));
    }

    #[test]
    fn a1_coefficient_at_odd_dimension() {
        // (1/4)(β(5) − 1) = (1/4)(3/8 − 1) = −5/32
        let c = a1_boundary_coefficient();
        assert_eq!(c.eval(5).unwrap(), SqrtPiNumber::from_rational(q(-5, 32)));
    }

    #[test]
    fn a2_psi_pair_term() {
        // ψ = γ_m: ψ̂ = γ_m^{−1}γ_m = I, so (1/2)Tr{ψ̂+ψ̂*} = Tr{I}
        let rep = clifford_rep(4).unwrap();
        let mut data = BoundaryGeometryData::zeroed(rep.clone());
        data.psi = rep.gamma_m().clone();
        let v = a2_density(&data).unwrap();
        assert_eq!(v.boundary.coeff(0, 0), GaussRational::from_int(4));
        assert!(v.interior.is_zero());
    }

    #[test]
    fn a2_ball_boundary_vanishes_at_m4() {
        // 1 − (3/4)πβ(4) = 0, so the L_aa term cancels exactly
        let rep = clifford_rep(4).unwrap();
        let data =
            BoundaryGeometryData::ball(rep, Rational::one(), Rational::zero(), Rational::zero());
        let v = a2_density(&data).unwrap();
        assert_eq!(v.boundary.to_sqrtpi().unwrap(), SqrtPiNumber::zero());
    }

    #[test]
    fn adjoint_examples() {
        let rep = clifford_rep(4).unwrap();
        let n = rep.dim();
        // Θ = 0, L = 0 -> Θ₂ = 0
        let data = BoundaryGeometryData::zeroed(rep.clone());
        assert!(adjoint_data(&data).theta.is_zero());

        // involution when L = 0
        let mut data = BoundaryGeometryData::zeroed(rep.clone());
        let h = Matrix::from_fn(n, |r, c| {
            GaussRational::new(q((2 * r + c) as i64, 3), q(r as i64 - c as i64, 2))
        });
        data.theta = &h + &h.adjoint();
        data.psi = Matrix::from_fn(n, |r, c| GaussRational::new(q(r as i64, 7), q(c as i64, 5)));
        let twice = adjoint_data(&adjoint_data(&data));
        assert_eq!(twice.theta, data.theta);
        assert_eq!(twice.psi, data.psi);

        // Hermiticity preserved with L = I
        let mut data2 = data.clone();
        for a in 0..3 {
            data2.l[a][a] = Rational::one();
        }
        let dual = adjoint_data(&data2);
        assert!(dual.theta.is_hermitian());
        // commuting scalar Θ: Θ₂ = −Θ + (m−1)I
        let mut data3 = BoundaryGeometryData::zeroed(rep);
        for a in 0..3 {
            data3.l[a][a] = Rational::one();
        }
        data3.theta = Matrix::scalar(n, GaussRational::from_rational(q(5, 2)));
        let dual3 = adjoint_data(&data3);
        assert_eq!(
            dual3.theta,
            Matrix::scalar(n, GaussRational::from_rational(q(1, 2)))
        );
    }

    fn random_matrix(rng: &mut impl rand::Rng, n: usize, den: i64) -> Matrix {
        let mut mat = Matrix::zero(n);
        for r in 0..n {
            for c in 0..n {
                mat[(r, c)] = GaussRational::new(
                    q(rng.gen_range(-6..7), den),
                    q(rng.gen_range(-6..7), den + 1),
                );
            }
        }
        mat
    }

    /// Random flat boundary data per the index-symmetry setting:
    /// arbitrary ψ, Hermitian Θ, symmetric L, τ = ρ_mm = 0, F = 1.
    pub(crate) fn random_flat_data(
        rng: &mut impl rand::Rng,
        rep: &CliffordRep,
    ) -> BoundaryGeometryData {
        let n = rep.dim();
        let m = rep.m;
        let mut data = BoundaryGeometryData::zeroed(rep.clone());
        data.psi = random_matrix(rng, n, 3);
        let h = random_matrix(rng, n, 2);
        data.theta = &h + &h.adjoint();
        for a in 0..(m - 1) as usize {
            for b in a..(m - 1) as usize {
                let v = q(rng.gen_range(-6..7), 4);
                data.l[a][b] = v.clone();
                data.l[b][a] = v;
            }
        }
        data
    }

    #[test]
    fn index_symmetry_smoke() {
        // exact equality of the density and its adjoint-dual on flat data
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for m in [4i64, 6] {
            let rep = clifford_rep(m).unwrap();
            for _ in 0..10 {
                let data = random_flat_data(&mut rng, &rep);
                let lhs = a3_density(&data).unwrap();
                let rhs = a3_density(&adjoint_data(&data)).unwrap();
                assert_eq!(lhs, rhs, "m = {m}");
            }
        }
    }

    #[test]
    fn w_slots_carry_zero_weight() {
        // supplying curvature-twist data exercises the d14/d15 slots, whose
        // canonical weights vanish, so the density is unchanged
        let rep = clifford_rep(4).unwrap();
        let n = rep.dim();
        let mut data = BoundaryGeometryData::zeroed(rep.clone());
        data.psi = Matrix::from_fn(n, |r, c| {
            GaussRational::from_int((r + 3 * c) as i64 % 4 - 1)
        });
        for a in 0..3 {
            data.l[a][a] = Rational::one();
        }
        let base = a3_density(&data).unwrap();
        let some = Matrix::from_fn(n, |r, c| {
            GaussRational::new(q(r as i64 - c as i64, 2), q((r * c) as i64, 3))
        });
        let mut w_ab = vec![vec![Matrix::zero(n); 3]; 3];
        for a in 0..3 {
            for b in a + 1..3 {
                w_ab[a][b] = some.clone();
                w_ab[b][a] = -&some;
            }
        }
        data.w_ab = Some(w_ab);
        data.w_am = Some(vec![some.clone(), some.clone(), some]);
        assert_eq!(a3_density(&data).unwrap(), base);
    }

    #[test]
    fn laplace_normal_form_flat() {
        let rep = clifford_rep(4).unwrap();
        let n = rep.dim();
        let b = Matrix::from_fn(n, |r, c| GaussRational::from_int((r * n + c) as i64));
        let sym = SymbolData::flat(4, vec![Matrix::zero(n); 4], b.clone());
        let (omega, e) = laplace_normal_form(&sym).unwrap();
        assert!(omega.iter().all(|w| w.is_zero()));
        assert_eq!(e, b);
    }

    #[test]
    fn laplace_normal_form_constant_connection() {
        // a = 2ω̄ with flat metric gives ω = ω̄ and E = b − Σ ω̄_ν²
        let rep = clifford_rep(4).unwrap();
        let n = rep.dim();
        let wbar: Vec<Matrix> = (0..4)
            .map(|k| Matrix::from_fn(n, |r, c| GaussRational::from_int((r + c + k) as i64 % 3)))
            .collect();
        let b = Matrix::identity(n);
        let a: Vec<Matrix> = wbar
            .iter()
            .map(|w| w.scale(&GaussRational::from_int(2)))
            .collect();
        let sym = SymbolData::flat(4, a, b.clone());
        let (omega, e) = laplace_normal_form(&sym).unwrap();
        assert_eq!(omega, wbar);
        let mut want = b;
        for w in &wbar {
            want = &want - &(w * w);
        }
        assert_eq!(e, want);
    }

    #[test]
    fn laplace_normal_form_domega() {
        // g = I, a = 0, b = 0, ∂_ν ω_μ = δ_{νμ} c·I: E = −(dim)·c·I
        let rep = clifford_rep(4).unwrap();
        let n = rep.dim();
        let c = GaussRational::from_rational(q(5, 3));
        let mut sym = SymbolData::flat(4, vec![Matrix::zero(n); 4], Matrix::zero(n));
        for nu in 0..4 {
            sym.domega[nu][nu] = Matrix::scalar(n, c.clone());
        }
        let (_, e) = laplace_normal_form(&sym).unwrap();
        assert_eq!(
            e,
            Matrix::scalar(n, GaussRational::from_rational(q(-20, 3)))
        );
    }

    #[test]
    fn singular_metric_rejected() {
        let rep = clifford_rep(4).unwrap();
        let n = rep.dim();
        let mut sym = SymbolData::flat(4, vec![Matrix::zero(n); 4], Matrix::zero(n));
        sym.metric[2][2] = Rational::zero();
        assert!(matches!(
            laplace_normal_form(&sym),
            Err(InvariantError::SingularMetric)
        ));
    }

    #[test]
    fn w_trace_vanishing() {
        // W = I ⊗ w commutes with the tensored Clifford action:
        // Tr{W_ab γ_a^T γ_b^T} = 0 for antisymmetric families and
        // Tr{W_am γ_a^T} = 0.
        for m in [4i64, 6] {
            let rep = clifford_rep(m).unwrap().tensor_identity(2);
            let n = rep.dim();
            let t = (m - 1) as usize;
            let small = |s: i64| {
                Matrix::from_fn(2, move |r, c| {
                    GaussRational::new(q((r as i64 + s) % 5, 3), q(c as i64 - s, 4))
                })
            };
            let id_big = Matrix::identity(n / 2);
            let lift = |w: &Matrix| id_big.kron(w);
            // antisymmetric family W_ab = -W_ba
            let mut s_ab = Matrix::zero(n);
            for a in 0..t {
                for b in 0..t {
                    if a == b {
                        continue;
                    }
                    let w = if a < b {
                        lift(&small((a * t + b) as i64))
                    } else {
                        -&lift(&small((b * t + a) as i64))
                    };
                    s_ab = &s_ab + &(&(&w * rep.gamma_t(a)) * rep.gamma_t(b));
                }
            }
            assert!(s_ab.trace().is_zero(), "W_ab trace, m = {m}");
            let mut s_am = Matrix::zero(n);
            for a in 0..t {
                s_am = &s_am + &(&lift(&small(a as i64 + 11)) * rep.gamma_t(a));
            }
            assert!(s_am.trace().is_zero(), "W_am trace, m = {m}");
        }
    }

    #[test]
    fn tangential_divergence_identity() {
        // L_ab γ_b γ_a − L_aa γ_m γ_m = 0 for symmetric L
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for m in [4i64, 6] {
            let rep = clifford_rep(m).unwrap();
            let t = (m - 1) as usize;
            let n = rep.dim();
            let mut l = vec![vec![Rational::zero(); t]; t];
            for a in 0..t {
                for b in a..t {
                    let v = q(rng.gen_range(-5..6), 3);
                    l[a][b] = v.clone();
                    l[b][a] = v;
                }
            }
            let mut acc = Matrix::zero(n);
            for a in 0..t {
                for b in 0..t {
                    acc = &acc + &(rep.gamma(b) * rep.gamma(a)).scale_rat(&l[a][b]);
                }
            }
            let mut l_aa = Rational::zero();
            for a in 0..t {
                l_aa += l[a][a].clone();
            }
            let gmgm = (rep.gamma_m() * rep.gamma_m()).scale_rat(&l_aa);
            assert!((&acc - &gmgm).is_zero(), "m = {m}");
        }
    }
}
