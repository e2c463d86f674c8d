use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hermite_wronskian::{
    certify, certify_segment, hermite, omega_poly, resultant, signed_recurrence_check,
    veselov_scan, HermiteCache,
};
use hermite_wronskian_bench::{workload_segments, workload_sets};
use std::hint::black_box;

fn bench_hermite(c: &mut Criterion) {
    c.bench_function("hermite table 0..=60 cold", |b| {
        b.iter(|| {
            let cache = HermiteCache::new();
            black_box(cache.get(60))
        })
    });
}

fn bench_omega(c: &mut Criterion) {
    let mut g = c.benchmark_group("omega");
    for (name, set) in workload_sets() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &set, |b, s| {
            b.iter(|| omega_poly(black_box(s)))
        });
    }
    g.finish();
}

fn bench_certify(c: &mut Criterion) {
    let mut g = c.benchmark_group("certify");
    for (name, set) in workload_sets() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &set, |b, s| {
            b.iter(|| certify(black_box(s)).unwrap())
        });
    }
    g.finish();
}

fn bench_resultant(c: &mut Criterion) {
    let mut g = c.benchmark_group("resultant H_n H_n+1");
    for n in [10usize, 20, 40] {
        let (p, q) = (hermite(n), hermite(n + 1));
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| resultant(black_box(&p), black_box(&q)).unwrap())
        });
    }
    g.finish();
}

fn bench_segments(c: &mut Criterion) {
    let mut g = c.benchmark_group("segment");
    for (p, q) in workload_segments() {
        let id = format!("S({p},{q})");
        g.bench_function(BenchmarkId::new("certificate", &id), |b| {
            b.iter(|| certify_segment(black_box(p), black_box(q)).unwrap())
        });
        g.bench_function(BenchmarkId::new("recurrence", &id), |b| {
            b.iter(|| signed_recurrence_check(black_box(p), black_box(q)).unwrap())
        });
    }
    g.finish();
}

fn bench_scan(c: &mut Criterion) {
    let mut g = c.benchmark_group("scan");
    g.sample_size(10);
    g.bench_function("subsets of 1..=8", |b| {
        b.iter(|| veselov_scan(8, 8).unwrap())
    });
    g.finish();
}

criterion_group!(
    benches,
    bench_hermite,
    bench_omega,
    bench_certify,
    bench_resultant,
    bench_segments,
    bench_scan
);
criterion_main!(benches);
