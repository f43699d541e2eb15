//! Exact residue pipeline for the ball zeta function.
//!
//! After contour rotation and the uniform expansion, the ball zeta function
//! splits into Γ-weighted multiples of the sphere zeta function
//! Z(u) = ζ_{S^{m−1}}(u):
//!
//! ```text
//! A_{−1}(s) = 1/(4Γ(½)) · Γ(s−½)/Γ(s+1) · Z(s−½)
//! A_0(s)   = −¼ Z(s)
//! A_1(s)   = −1/Γ(s) · Z(s+½) · [Γ(s+½)/(8Γ(½)) − 5Γ(s+3/2)/(12Γ(½))]
//! A_2(s)   = −1/Γ(s) · Z(s+1) · [Γ(s+1)/16 − 3Γ(s+2)/8 + 5Γ(s+3)/32]
//! ```
//!
//! The third coefficient is Γ(s₀)·Σ Res_{s=s₀} A_i at s₀ = (m−3)/2. Radial
//! smearing by r^{2j} multiplies the spectrum by polynomial weights in the
//! order p and shifts s, which maps to evaluating the same terms at shifted
//! points with the base zeta argument lowered by half-integer steps (p^k
//! lowers the argument by k/2).
//!
//! Every quantity stays in exact √π-Laurent arithmetic; residues come from
//! the Barnes machinery and Γ-poles from the functional equation.

use super::heat::SmearedF;
use crate::barnes::{base_zeta_residue, base_zeta_value_nonpositive, spinor_dim};
use crate::exact::{gamma_half, gamma_residue_at, Rational, SqrtPiNumber};
use crate::BallError;

/// Polynomial weight in the order variable: Σ w_k p^k.
pub type OrderWeight = Vec<(u32, Rational)>;

/// One product c · ΠΓ(s + α_i) / ΠΓ(s + β_j) · Z(s + δ); offsets and shifts
/// are stored doubled so every argument is an integer.
struct ResidueTerm {
    coeff: SqrtPiNumber,
    gamma_num: Vec<i64>,
    gamma_den: Vec<i64>,
    zeta_shift: i64,
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// The four expansion families; index 0 is A_{−1}.
fn expansion_terms() -> [Vec<ResidueTerm>; 4] {
    [
        vec![ResidueTerm {
            // 1/(4Γ(½)) Γ(s−½)/Γ(s+1) Z(s−½)
            coeff: SqrtPiNumber::monomial(q(1, 4), -1),
            gamma_num: vec![-1],
            gamma_den: vec![2],
            zeta_shift: -1,
        }],
        vec![ResidueTerm {
            // −¼ Z(s)
            coeff: SqrtPiNumber::monomial(q(-1, 4), 0),
            gamma_num: vec![],
            gamma_den: vec![],
            zeta_shift: 0,
        }],
        vec![
            ResidueTerm {
                // −1/(8Γ(½)) Γ(s+½)/Γ(s) Z(s+½)
                coeff: SqrtPiNumber::monomial(q(-1, 8), -1),
                gamma_num: vec![1],
                gamma_den: vec![0],
                zeta_shift: 1,
            },
            ResidueTerm {
                // +5/(12Γ(½)) Γ(s+3/2)/Γ(s) Z(s+½)
                coeff: SqrtPiNumber::monomial(q(5, 12), -1),
                gamma_num: vec![3],
                gamma_den: vec![0],
                zeta_shift: 1,
            },
        ],
        vec![
            ResidueTerm {
                coeff: SqrtPiNumber::monomial(q(-1, 16), 0),
                gamma_num: vec![2],
                gamma_den: vec![0],
                zeta_shift: 2,
            },
            ResidueTerm {
                coeff: SqrtPiNumber::monomial(q(3, 8), 0),
                gamma_num: vec![4],
                gamma_den: vec![0],
                zeta_shift: 2,
            },
            ResidueTerm {
                coeff: SqrtPiNumber::monomial(q(-5, 32), 0),
                gamma_num: vec![6],
                gamma_den: vec![0],
                zeta_shift: 2,
            },
        ],
    ]
}

fn is_gamma_pole(two_arg: i64) -> bool {
    two_arg <= 0 && two_arg % 2 == 0
}

/// Residue at s₀ (passed doubled) of one term with the base zeta function
/// replaced by the weighted combination Σ w_k Z(· − k/2).
fn term_residue(
    term: &ResidueTerm,
    two_s0: i64,
    m: i64,
    weight: &OrderWeight,
) -> Result<SqrtPiNumber, BallError> {
    // a Γ-pole in the denominator kills the term
    for &o in &term.gamma_den {
        if is_gamma_pole(two_s0 + o) {
            return Ok(SqrtPiNumber::zero());
        }
    }
    let gamma_poles: Vec<i64> = term
        .gamma_num
        .iter()
        .copied()
        .filter(|&o| is_gamma_pole(two_s0 + o))
        .collect();
    let zeta_arg = |k: u32| two_s0 + term.zeta_shift - k as i64;
    let has_zeta_pole = weight
        .iter()
        .any(|&(k, _)| (1..=m - 1).contains(&zeta_arg(k)));

    match (gamma_poles.len(), has_zeta_pole) {
        (0, false) => Ok(SqrtPiNumber::zero()),
        (0, true) => {
            let mut reg = term.coeff.clone();
            for &o in &term.gamma_num {
                reg = &reg * &gamma_half(two_s0 + o)?;
            }
            for &o in &term.gamma_den {
                reg = reg.div(&gamma_half(two_s0 + o)?)?;
            }
            let mut res = SqrtPiNumber::zero();
            for (k, w) in weight {
                let r = base_zeta_residue(zeta_arg(*k), m)?;
                res = &res + &r.scale(w);
            }
            Ok(&reg * &res)
        }
        (1, false) => {
            // simple Γ-pole: residue of Γ times the rest evaluated at s₀,
            // with the weighted zeta needing only values at non-positive
            // integer arguments
            let pole = gamma_poles[0];
            let mut reg = term.coeff.scale(&gamma_residue_at((two_s0 + pole) / 2));
            let mut skipped = false;
            for &o in &term.gamma_num {
                if !skipped && o == pole {
                    skipped = true;
                    continue;
                }
                reg = &reg * &gamma_half(two_s0 + o)?;
            }
            for &o in &term.gamma_den {
                reg = reg.div(&gamma_half(two_s0 + o)?)?;
            }
            let mut val = SqrtPiNumber::zero();
            for (k, w) in weight {
                let v = base_zeta_value_nonpositive(zeta_arg(*k), m)?;
                val = &val + &v.scale(w);
            }
            Ok(&reg * &val)
        }
        _ => Err(BallError::ResidueUnsupported(
            "higher-order pole encountered".into(),
        )),
    }
}

fn unit_weight() -> OrderWeight {
    vec![(0, Rational::one())]
}

/// Residues of A_{−1}, A_0, A_1, A_2 at s = (m−3)/2, exactly.
pub fn residue_pipeline(m: i64) -> Result<[SqrtPiNumber; 4], BallError> {
    spinor_dim(m)?;
    let two_s0 = m - 3;
    let weight = unit_weight();
    let fams = expansion_terms();
    let mut out = [
        SqrtPiNumber::zero(),
        SqrtPiNumber::zero(),
        SqrtPiNumber::zero(),
        SqrtPiNumber::zero(),
    ];
    for (i, fam) in fams.iter().enumerate() {
        for t in fam {
            let r = term_residue(t, two_s0, m, &weight)?;
            out[i] = &out[i] + &r;
        }
    }
    Ok(out)
}

/// Γ((m−3)/2) · Σ Res A_i — the third coefficient via the residue route.
pub fn a3_residue_total(m: i64) -> Result<SqrtPiNumber, BallError> {
    let rs = residue_pipeline(m)?;
    let mut sum = SqrtPiNumber::zero();
    for r in &rs {
        sum = &sum + r;
    }
    Ok(&gamma_half(m - 3)? * &sum)
}

/// The closed form
/// a₃ = 2^{−5−m}(m−1)d_s · [8(4m−11)Γ(m/2) + (17−7m)Γ(½)Γ((m+1)/2)]
///      / (3Γ(m/2)Γ((m+1)/2)).
pub fn a3_ball_closed_form(m: i64) -> Result<SqrtPiNumber, BallError> {
    let d_s = spinor_dim(m)? as i64;
    let g_half = gamma_half(1)?;
    let g_m2 = gamma_half(m)?;
    let g_m12 = gamma_half(m + 1)?;
    let num = &g_m2.scale(&q(8 * (4 * m - 11), 1)) + &(&g_half * &g_m12).scale(&q(17 - 7 * m, 1));
    let den = (&g_m2 * &g_m12).scale(&q(3, 1));
    let front = q(1, 1 << (5 + m)) * q((m - 1) * d_s, 1);
    Ok(num.div(&den)?.scale(&front))
}

/// Exact third coefficient for the smeared trace with F(r) = f0 + f1r² + f2r⁴:
/// each radial moment contributes its constant part at the original point
/// and polynomial-weighted evaluations at shifted points.
pub fn smeared_a3_exact(m: i64, f: &SmearedF) -> Result<SqrtPiNumber, BallError> {
    spinor_dim(m)?;
    let two_s0 = m - 3;
    let fams = expansion_terms();

    let family_sum =
        |shift_doubled: i64, weight: &OrderWeight| -> Result<SqrtPiNumber, BallError> {
            let mut acc = SqrtPiNumber::zero();
            for fam in &fams {
                for t in fam {
                    let r = term_residue(t, two_s0 + shift_doubled, m, weight)?;
                    acc = &acc + &r;
                }
            }
            Ok(acc)
        };

    // r³ moment: (2p² + 3p + 1)/(3μ²) + 1/3
    let w_r2: OrderWeight = vec![(0, q(1, 3)), (1, q(1, 1)), (2, q(2, 3))];
    // r⁵ moment: (8p⁴ + 20p³ − 20p − 8)/(15μ⁴) + (4p² + 10p + 4)/(15μ²) + 1/5
    let w_r4_mu2: OrderWeight = vec![(0, q(4, 15)), (1, q(10, 15)), (2, q(4, 15))];
    let w_r4_mu4: OrderWeight = vec![
        (0, q(-8, 15)),
        (1, q(-20, 15)),
        (3, q(20, 15)),
        (4, q(8, 15)),
    ];

    // constant parts of the moments ride along with f0
    let const_part = f.f0.clone() + f.f1.clone() * q(1, 3) + f.f2.clone() * q(1, 5);
    let mut total = family_sum(0, &unit_weight())?.scale(&const_part);
    if !f.f1.is_zero() {
        total = &total + &family_sum(2, &w_r2)?.scale(&f.f1);
    }
    if !f.f2.is_zero() {
        total = &total + &family_sum(2, &w_r4_mu2)?.scale(&f.f2);
        total = &total + &family_sum(4, &w_r4_mu4)?.scale(&f.f2);
    }
    Ok(&gamma_half(m - 3)? * &total)
}
