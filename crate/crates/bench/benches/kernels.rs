use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tfpoly::{
    count, counting_polynomial, enumerate_classes, rank_generating, tutte, verify_graph, Budget, CountQuery, Family,
    Filter, Relation,
};
use tfpoly_bench::fixtures;

fn polynomials(c: &mut Criterion) {
    let b = Budget::default();
    let mut group = c.benchmark_group("polynomials");
    for (name, g) in fixtures() {
        group.bench_with_input(BenchmarkId::new("tutte", name), &g, |bench, g| bench.iter(|| tutte(black_box(g))));
        group.bench_with_input(BenchmarkId::new("rank_generating", name), &g, |bench, g| {
            bench.iter(|| rank_generating(black_box(g), &b).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("kappa_int", name), &g, |bench, g| {
            bench.iter(|| counting_polynomial(black_box(g), Family::KappaInt, &b).unwrap())
        });
    }
    group.finish();
}

fn counts(c: &mut Criterion) {
    let b = Budget::default();
    let mut group = c.benchmark_group("count");
    for (name, g) in fixtures() {
        for family in [Family::KappaMod, Family::KappaInt, Family::KappaBarMod] {
            let q = CountQuery::new(family, 3, 3);
            group.bench_with_input(BenchmarkId::new(family.name(), name), &g, |bench, g| {
                bench.iter(|| count(black_box(g), &q, &b).unwrap())
            });
        }
    }
    group.finish();
}

fn classes(c: &mut Criterion) {
    let b = Budget::default();
    let mut group = c.benchmark_group("classes");
    for (name, g) in fixtures() {
        group.bench_with_input(BenchmarkId::new("cut_eulerian", name), &g, |bench, g| {
            bench.iter(|| enumerate_classes(black_box(g), Relation::CutEulerian, Filter::All, &b).unwrap())
        });
    }
    group.finish();
}

fn verification(c: &mut Criterion) {
    let b = Budget::default();
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for (name, g) in fixtures().into_iter().take(2) {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |bench, g| {
            bench.iter(|| verify_graph(black_box(g), &b))
        });
    }
    group.finish();
}

criterion_group!(benches, polynomials, counts, classes, verification);
criterion_main!(benches);
