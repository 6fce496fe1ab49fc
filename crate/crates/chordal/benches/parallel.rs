//! Compares the verification suites run sequentially (`jobs = 1`) against
//! the work-stealing pool (`jobs = 0`, all cores). Without the `parallel`
//! feature both arms run sequentially, which makes the regression visible.

use chordal::suites::{section3_suite, subdivision_suite};
use chordal::Caps;
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn inequality_sweep(c: &mut Criterion) {
    let caps = Caps::default();
    let mut group = c.benchmark_group("section3-40-drawings");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| black_box(section3_suite(40, 0, 1, &caps).unwrap()))
    });
    group.bench_function("parallel", |b| {
        b.iter(|| black_box(section3_suite(40, 0, 0, &caps).unwrap()))
    });
    group.finish();
}

fn exhaustive_orders(c: &mut Criterion) {
    let caps = Caps::default();
    let mut group = c.benchmark_group("subdivisions-12k-orders");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| black_box(subdivision_suite(1, &caps).unwrap()))
    });
    group.bench_function("parallel", |b| {
        b.iter(|| black_box(subdivision_suite(0, &caps).unwrap()))
    });
    group.finish();
}

criterion_group!(benches, inequality_sweep, exhaustive_orders);
criterion_main!(benches);
