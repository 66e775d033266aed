use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use spex1p_core::constructions::{cycle_ladder, path_square_plus, spex_candidate};
use spex1p_core::extremal::{candidate_duel, graph_classes};
use spex1p_core::planarity::DEFAULT_BUDGET;
use spex1p_core::spectral::DEFAULT_TOL;
use spex1p_core::{canonical_form, is_one_planar, is_planar, join, spectral_radius, Graph};

fn spectral(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectral_radius");
    for n in [50usize, 200, 1000] {
        let g = join(&cycle_ladder(n - 2).unwrap(), &Graph::empty(2));
        group.bench_with_input(BenchmarkId::new("2K1+ladder", n), &g, |b, g| {
            b.iter(|| spectral_radius(black_box(g), DEFAULT_TOL).unwrap())
        });
    }
    group.finish();
}

fn planarity(c: &mut Criterion) {
    let g = spex_candidate(5, 200, 0).unwrap().0;
    let p = path_square_plus(500).unwrap();
    c.bench_function("is_planar/P500^2+", |b| b.iter(|| is_planar(black_box(&p))));
    c.bench_function("is_planar/candidate t=5 n=200", |b| {
        b.iter(|| is_planar(black_box(&g)))
    });
    c.bench_function("is_one_planar/K6", |b| {
        b.iter(|| is_one_planar(black_box(&Graph::complete(6)), DEFAULT_BUDGET))
    });
}

fn enumeration(c: &mut Criterion) {
    let g = path_square_plus(14).unwrap();
    c.bench_function("canonical_form/P14^2+", |b| {
        b.iter(|| canonical_form(black_box(&g)).unwrap())
    });
    let mut group = c.benchmark_group("graph_classes");
    group.sample_size(10);
    group.bench_function("n=6", |b| b.iter(|| graph_classes(6, |_| true)));
    group.finish();
}

fn duel(c: &mut Criterion) {
    let ns: Vec<usize> = (8..=60).step_by(2).collect();
    let mut group = c.benchmark_group("candidate_duel");
    group.sample_size(10);
    group.bench_function("t=5 even 8..60", |b| {
        b.iter(|| candidate_duel(5, black_box(&ns), DEFAULT_TOL).unwrap())
    });
    group.finish();
}

criterion_group!(benches, spectral, planarity, enumeration, duel);
criterion_main!(benches);
