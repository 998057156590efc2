use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use polybound::{closed_form_bound, hadamard_bound, spectral_radius_bound, windowed_search_bound};
use polybound_bench::pseudo_random_matrix;
use std::hint::black_box;

fn charpoly_bounds(c: &mut Criterion) {
    let mut group = c.benchmark_group("charpoly_bounds");
    for &(n, b) in &[
        (100usize, 1.0f64),
        (10_000, 1.0),
        (10_000, 1000.0),
        (1_000_000, 1.0),
    ] {
        let id = format!("n{n}_b{b}");
        group.bench_with_input(
            BenchmarkId::new("windowed", &id),
            &(n, b),
            |bench, &(n, b)| bench.iter(|| windowed_search_bound(black_box(n), black_box(b))),
        );
        group.bench_with_input(
            BenchmarkId::new("closed_form", &id),
            &(n, b),
            |bench, &(n, b)| bench.iter(|| closed_form_bound(black_box(n), black_box(b))),
        );
        group.bench_with_input(
            BenchmarkId::new("hadamard", &id),
            &(n, b),
            |bench, &(n, b)| bench.iter(|| hadamard_bound(black_box(n), black_box(b))),
        );
    }
    group.finish();
}

fn spectral(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectral_radius");
    for &n in &[16usize, 64, 256] {
        let a = pseudo_random_matrix(n, 10, n as u64);
        a.stats();
        group.bench_with_input(BenchmarkId::from_parameter(n), &a, |bench, a| {
            bench.iter(|| spectral_radius_bound(black_box(a)))
        });
    }
    group.finish();
}

criterion_group!(benches, charpoly_bounds, spectral);
criterion_main!(benches);
