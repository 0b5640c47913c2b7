use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ehresmann::category::{morphism_correspondence, DEFAULT_MAP_CEILING};
use ehresmann::orders::enumerate_ehresmann_orders;
use ehresmann::{par, sweep, zoo};

// 1 is the sequential baseline, 0 the default pool
const THREADS: [usize; 2] = [1, 0];

fn label(threads: usize) -> &'static str {
    if threads == 1 {
        "sequential"
    } else {
        "parallel"
    }
}

fn bench_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep-3");
    group.sample_size(20);
    for t in THREADS {
        group.bench_function(BenchmarkId::from_parameter(label(t)), |b| {
            b.iter(|| par::with_threads(t, || sweep::sweep(black_box(3)).unwrap()))
        });
    }
    group.finish();
}

fn bench_enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate-3");
    for t in THREADS {
        group.bench_function(BenchmarkId::from_parameter(label(t)), |b| {
            b.iter(|| par::with_threads(t, || zoo::enumerate_ehresmann_semigroups(black_box(3), false, false).unwrap()))
        });
    }
    group.finish();
}

fn bench_enumerate_four(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate-4");
    group.sample_size(10);
    for t in THREADS {
        group.bench_function(BenchmarkId::from_parameter(label(t)), |b| {
            b.iter(|| par::with_threads(t, || zoo::enumerate_ehresmann_semigroups(black_box(4), false, true).unwrap()))
        });
    }
    group.finish();
}

fn bench_orders(c: &mut Criterion) {
    let rel2 = zoo::gen_rel(2).unwrap().structure;
    let mut group = c.benchmark_group("orders-rel-2");
    group.sample_size(10);
    for t in THREADS {
        group.bench_function(BenchmarkId::from_parameter(label(t)), |b| {
            b.iter(|| par::with_threads(t, || enumerate_ehresmann_orders(black_box(&rel2), false).unwrap()))
        });
    }
    group.finish();
}

fn bench_morphisms(c: &mut Criterion) {
    let z = zoo::example_zero_one_nabla().ordered(None).unwrap();
    let pi = zoo::example_partial_injections().ordered(None).unwrap();
    let mut group = c.benchmark_group("morphisms");
    for t in THREADS {
        group.bench_function(BenchmarkId::from_parameter(label(t)), |b| {
            b.iter(|| {
                par::with_threads(t, || morphism_correspondence(black_box(&z), black_box(&pi), DEFAULT_MAP_CEILING).unwrap())
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bench_sweep, bench_enumerate, bench_enumerate_four, bench_orders, bench_morphisms);
criterion_main!(benches);
