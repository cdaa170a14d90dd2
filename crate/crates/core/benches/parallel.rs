//! Compares the data-parallel series multiply against the sequential path,
//! and whole verification batches under one thread versus the full pool.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use qcrank::{euler, find_cases, nb_series, Verifier};

fn series_mul(c: &mut Criterion) {
    let mut group = c.benchmark_group("series-mul");
    group.sample_size(10);
    for &n in &[256i64, 1024] {
        let f = euler(n).pow(-3).expect("unit lead");
        let g = euler(n).pow(5).expect("unit lead");
        group.bench_function(format!("parallel/{n}"), |b| {
            b.iter(|| &f * &g);
        });
        group.bench_function(format!("sequential/{n}"), |b| {
            b.iter(|| f.mul_sequential(&g));
        });
    }
    group.finish();
}

fn crank_series(c: &mut Criterion) {
    let mut group = c.benchmark_group("crank-series");
    group.sample_size(10);
    group.bench_function("nb/k2/p300/pool", |b| {
        b.iter(|| nb_series(2, 5, 300));
    });
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("single-thread pool");
    group.bench_function("nb/k2/p300/one-thread", |b| {
        b.iter(|| single.install(|| nb_series(2, 5, 300)));
    });
    group.finish();
}

fn verify_batch(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify-lemmas");
    group.sample_size(10);
    let cases = find_cases("eq-2-*");
    group.bench_function("order60/pool", |b| {
        b.iter_batched(
            Verifier::new,
            |v| v.verify_selected(&cases, Some(60)),
            BatchSize::SmallInput,
        );
    });
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("single-thread pool");
    group.bench_function("order60/one-thread", |b| {
        b.iter_batched(
            Verifier::new,
            |v| single.install(|| v.verify_selected(&cases, Some(60))),
            BatchSize::SmallInput,
        );
    });
    group.finish();
}

criterion_group!(benches, series_mul, crank_series, verify_batch);
criterion_main!(benches);
