//! Criterion benchmarks for the hot paths: exact relation verification,
//! the series machinery, Clifford density evaluation, Bessel zero hunting,
//! and heat-trace summation.

use criterion::{criterion_group, criterion_main, Criterion};
use heatspec_core::ballspec::{bessel_zeros, heat_trace, residue_pipeline, BallConfig, ZeroTable};
use heatspec_core::debye::cumulants;
use heatspec_core::exact::Rational;
use heatspec_core::invariants::{
    a3_density, clifford_rep, coefficient_table, verify_relations, BoundaryGeometryData,
};
use heatspec_core::matrix::Matrix;
use std::hint::black_box;

fn bench_relations(c: &mut Criterion) {
    let table = coefficient_table();
    c.bench_function("relation suite", |b| {
        b.iter(|| {
            let report = verify_relations(black_box(table));
            assert!(report.all_pass());
        })
    });
}

fn bench_cumulants(c: &mut Criterion) {
    c.bench_function("cumulants to order 8", |b| {
        b.iter(|| black_box(cumulants(black_box(8))))
    });
}

fn bench_density(c: &mut Criterion) {
    let rep = clifford_rep(6).unwrap();
    let n = rep.dim();
    let mut data = BoundaryGeometryData::zeroed(rep);
    data.psi = Matrix::from_fn(n, |r, cc| {
        heatspec_core::exact::GaussRational::new(
            Rational::new((r + 2 * cc) as i64 % 5 - 2, 3),
            Rational::new((r * cc) as i64 % 7 - 3, 4),
        )
    });
    let h = data.psi.clone();
    data.theta = &h + &h.adjoint();
    for a in 0..5 {
        data.l[a][a] = Rational::one();
    }
    c.bench_function("boundary density m=6", |b| {
        b.iter(|| black_box(a3_density(black_box(&data)).unwrap()))
    });
}

fn bench_zeros(c: &mut Criterion) {
    c.bench_function("zeros of J_50 up to 200", |b| {
        b.iter(|| black_box(bessel_zeros(black_box(50.0), black_box(200.0)).unwrap()))
    });
}

fn bench_heat_trace(c: &mut Criterion) {
    let cfg = BallConfig::new(4).unwrap();
    let table = ZeroTable::build(4, 250.0).unwrap();
    c.bench_function("heat trace m=4 at t=7e-4", |b| {
        b.iter(|| black_box(heat_trace(&cfg, &table, black_box(7e-4), 42.0).unwrap()))
    });
}

fn bench_residues(c: &mut Criterion) {
    c.bench_function("residue pipeline m=10", |b| {
        b.iter(|| black_box(residue_pipeline(black_box(10)).unwrap()))
    });
}

criterion_group!(
    benches,
    bench_relations,
    bench_cumulants,
    bench_density,
    bench_zeros,
    bench_heat_trace,
    bench_residues
);
criterion_main!(benches);
