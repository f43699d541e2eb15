//! Error types shared across the crate.

use thiserror::Error;

/// Failures in the exact arithmetic layer.
#[derive(Debug, Error)]
pub enum ExactError {
    #[error("denominator of {expr} vanishes at m = {m}")]
    PoleAt { m: String, expr: String },
    #[error("Γ has a pole at {two_z}/2")]
    GammaPole { two_z: i64 },
    #[error("dimension m = {m} is below the supported range (m ≥ 4)")]
    DimensionTooSmall { m: i64 },
    #[error("cannot invert non-monomial √π value: {0}")]
    NonMonomialInverse(String),
}

/// Failures building or evaluating boundary-invariant data.
#[derive(Debug, Error)]
pub enum InvariantError {
    #[error("dimension m = {m} must be even and ≥ 4")]
    BadDimension { m: i64 },
    #[error("matrix dimension mismatch: expected {expected}, got {got} ({context})")]
    DimensionMismatch {
        expected: usize,
        got: usize,
        context: &'static str,
    },
    #[error("singular metric")]
    SingularMetric,
    #[error("density has nonzero imaginary part: {0}")]
    NonRealDensity(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Failures in the uniform-asymptotics layer.
#[derive(Debug, Error)]
pub enum DebyeError {
    #[error("expansion variable z must be positive, got {z}")]
    NonPositiveArgument { z: f64 },
    #[error("order p = {p} is below the asymptotic regime (need p ≥ 10)")]
    OrderTooSmall { p: f64 },
}

/// Failures in the ball spectral pipeline.
#[derive(Debug, Error)]
pub enum BallError {
    #[error(
        "argument outside supported range: nu = {nu}, x = {x} (need 0 ≤ nu ≤ 250, 0 ≤ x ≤ 600)"
    )]
    BesselRange { nu: f64, x: f64 },
    #[error("Bessel evaluation failed to converge at nu = {nu}, x = {x}")]
    BesselNoConverge { nu: f64, x: f64 },
    #[error("dimension m = {m} must be even and ≥ 4")]
    BadDimension { m: i64 },
    #[error(
        "cutoff infeasible: t = {t} needs zeros up to {needed:.1}, table holds {available:.1}"
    )]
    CutoffInfeasible { t: f64, needed: f64, available: f64 },
    #[error(
        "truncation bound {bound:.3e} exceeds 1e-15 of the trace value {value:.3e} at t = {t}"
    )]
    TailBoundExceeded { t: f64, value: f64, bound: f64 },
    #[error("mu = {mu} is not a zero of J_{p} (|J_p(mu)| = {resid:.3e})")]
    NotAZero { p: f64, mu: f64, resid: f64 },
    #[error("least-squares fit is ill-conditioned (cond ≈ {cond:.3e}); refusing to report")]
    IllConditioned { cond: f64 },
    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },
    #[error("zero cache I/O: {0}")]
    CacheIo(#[from] std::io::Error),
    #[error("zero cache corrupt: {0}")]
    CacheCorrupt(String),
    #[error("residue computation unsupported here: {0}")]
    ResidueUnsupported(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
