//! Least-squares extraction of expansion coefficients from trace samples.
//!
//! K(t) ~ Σ_k a_k t^{(k−m)/2}: after multiplying by t^{m/2} this is a
//! polynomial fit in x = √t. Columns are scaled to unit max before a
//! Householder QR solve; guard exponents beyond the requested order absorb
//! the first neglected terms of the expansion.

use super::heat::HeatTraceSample;
use crate::BallError;

/// Extracted coefficients with fit diagnostics.
#[derive(Clone, Debug)]
pub struct CoefficientExtract {
    /// â_0 … â_{k_fit}.
    pub a_hat: Vec<f64>,
    /// guard-term estimates beyond a_{k_fit} (not part of the contract).
    pub guards: Vec<f64>,
    /// condition estimate of the scaled design matrix.
    pub condition: f64,
    /// root-mean-square relative residual of the fit.
    pub rms_residual: f64,
}

/// Householder QR solve of the overdetermined system A x = y.
/// Returns (solution, condition estimate from the R diagonal).
fn lstsq(a: &mut [Vec<f64>], y: &mut [f64]) -> (Vec<f64>, f64) {
    let rows = a.len();
    let cols = a[0].len();
    for c in 0..cols {
        let norm = (c..rows).map(|r| a[r][c] * a[r][c]).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let alpha = if a[c][c] > 0.0 { -norm } else { norm };
        let mut v: Vec<f64> = (c..rows).map(|r| a[r][c]).collect();
        v[0] -= alpha;
        let vnorm2: f64 = v.iter().map(|t| t * t).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        for cc in c..cols {
            let dot: f64 = (c..rows).map(|r| v[r - c] * a[r][cc]).sum();
            let factor = 2.0 * dot / vnorm2;
            for r in c..rows {
                a[r][cc] -= factor * v[r - c];
            }
        }
        let dot: f64 = (c..rows).map(|r| v[r - c] * y[r]).sum();
        let factor = 2.0 * dot / vnorm2;
        for r in c..rows {
            y[r] -= factor * v[r - c];
        }
    }
    // back substitution
    let mut x = vec![0.0; cols];
    for c in (0..cols).rev() {
        let mut acc = y[c];
        for cc in c + 1..cols {
            acc -= a[c][cc] * x[cc];
        }
        x[c] = acc / a[c][c];
    }
    let dmax = (0..cols).map(|c| a[c][c].abs()).fold(0.0, f64::max);
    let dmin = (0..cols)
        .map(|c| a[c][c].abs())
        .fold(f64::INFINITY, f64::min);
    (x, dmax / dmin.max(f64::MIN_POSITIVE))
}

/// Fit â_0 … â_{k_fit} with `guards` extra exponents. Requires at least
/// k_fit + 3 samples and refuses ill-conditioned designs.
pub fn extract_coefficients(
    samples: &[HeatTraceSample],
    m: i64,
    k_fit: usize,
    guards: usize,
) -> Result<CoefficientExtract, BallError> {
    let needed = k_fit + 3;
    if samples.len() < needed {
        return Err(BallError::TooFewSamples {
            needed,
            got: samples.len(),
        });
    }
    let cols = k_fit + 1 + guards;
    if samples.len() < cols {
        return Err(BallError::TooFewSamples {
            needed: cols,
            got: samples.len(),
        });
    }

    let xs: Vec<f64> = samples.iter().map(|s| s.t.sqrt()).collect();
    let ys: Vec<f64> = samples
        .iter()
        .map(|s| s.value * s.t.powf(m as f64 / 2.0))
        .collect();

    // column scaling by the max |x^k| keeps the QR well behaved
    let mut scale = vec![0.0f64; cols];
    let mut design: Vec<Vec<f64>> = Vec::with_capacity(xs.len());
    for &x in &xs {
        let mut row = Vec::with_capacity(cols);
        let mut pw = 1.0f64;
        for (k, s) in scale.iter_mut().enumerate() {
            row.push(pw);
            *s = s.max(pw.abs());
            let _ = k;
            pw *= x;
        }
        design.push(row);
    }
    for row in &mut design {
        for (k, v) in row.iter_mut().enumerate() {
            *v /= scale[k];
        }
    }

    let mut rhs = ys.clone();
    let mut work = design.clone();
    let (mut coef_scaled, condition) = lstsq(&mut work, &mut rhs);
    if !(condition < 1e12) {
        return Err(BallError::IllConditioned { cond: condition });
    }
    // one step of iterative refinement knocks the conditioning noise down
    // by another factor of cond⁻¹·eps
    let mut resid: Vec<f64> = design
        .iter()
        .zip(&ys)
        .map(|(row, y)| {
            y - row
                .iter()
                .zip(&coef_scaled)
                .map(|(a, c)| a * c)
                .sum::<f64>()
        })
        .collect();
    let mut work2 = design.clone();
    let (correction, _) = lstsq(&mut work2, &mut resid);
    for (c, dc) in coef_scaled.iter_mut().zip(&correction) {
        *c += dc;
    }
    let coef: Vec<f64> = coef_scaled.iter().zip(&scale).map(|(c, s)| c / s).collect();

    // residual diagnostics relative to the sample values
    let mut rss = 0.0;
    for (i, &x) in xs.iter().enumerate() {
        let mut model = 0.0;
        let mut pw = 1.0;
        for c in &coef {
            model += c * pw;
            pw *= x;
        }
        let rel = (model - ys[i]) / ys[i].abs().max(f64::MIN_POSITIVE);
        rss += rel * rel;
    }
    let rms_residual = (rss / xs.len() as f64).sqrt();

    Ok(CoefficientExtract {
        a_hat: coef[..=k_fit].to_vec(),
        guards: coef[k_fit + 1..].to_vec(),
        condition,
        rms_residual,
    })
}
