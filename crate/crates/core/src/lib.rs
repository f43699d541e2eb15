//! Exact and numeric verification of the heat-trace boundary coefficients of
//! Dirac-type operators under spectral (APS) boundary conditions.
//!
//! The crate has two halves that check each other:
//!
//! * an exact symbolic side — arbitrary-precision rationals, the coefficient
//!   ring `Q(m)[β]`, Laurent numbers in √π, Clifford matrices, the boundary
//!   coefficient table with its linear relation system, and density
//!   evaluators over concrete boundary data ([`exact`], [`invariants`]);
//! * an independent spectral side on the unit ball — Bessel functions and
//!   their zeros, heat-trace summation with certified truncation bounds,
//!   least-squares coefficient extraction, and an exact residue pipeline
//!   through Barnes zeta functions ([`debye`], [`barnes`], [`ballspec`]).

// index-based loops mirror the summation conventions of the formulas
// (paired tensor indices a, b over the boundary frame); frozen reference
// constants keep their full generated precision; negated float comparisons
// are deliberate so that NaN falls on the rejecting side of every guard
#![allow(
    clippy::needless_range_loop,
    clippy::excessive_precision,
    clippy::neg_cmp_op_on_partial_ord
)]

pub mod ballspec;
pub mod barnes;
pub mod debye;
mod error;
pub mod exact;
pub mod invariants;
pub mod matrix;

pub use error::{BallError, DebyeError, ExactError, InvariantError};
pub use exact::{CoeffExpr, GaussRational, Poly, Rational, RationalFunction, SqrtPiNumber};
pub use matrix::Matrix;

#[cfg(test)]
mod concurrency_contract {
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn shared_types_are_send_and_sync() {
        assert_send_sync::<crate::exact::Rational>();
        assert_send_sync::<crate::exact::CoeffExpr>();
        assert_send_sync::<crate::exact::SqrtPiNumber>();
        assert_send_sync::<crate::matrix::Matrix>();
        assert_send_sync::<crate::invariants::CoefficientTable>();
        assert_send_sync::<crate::invariants::CliffordRep>();
        assert_send_sync::<crate::invariants::BoundaryGeometryData>();
        assert_send_sync::<crate::ballspec::ZeroTable>();
        assert_send_sync::<crate::ballspec::SmearedF>();
    }
}
