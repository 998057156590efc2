use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use polybound::{
    charpoly_mod, minpoly_mod, reconstruct_charpoly, reconstruct_minpoly, reduce_mod,
    ComputeOptions,
};
use polybound_bench::pseudo_random_matrix;
use std::hint::black_box;

const P31: u64 = 2_147_483_647;

fn modular(c: &mut Criterion) {
    let mut group = c.benchmark_group("modular");
    for &n in &[16usize, 64, 128] {
        let a = reduce_mod(&pseudo_random_matrix(n, 100, 7), P31);
        group.bench_with_input(BenchmarkId::new("charpoly_mod", n), &a, |bench, a| {
            bench.iter(|| charpoly_mod(black_box(a)))
        });
        group.bench_with_input(BenchmarkId::new("minpoly_mod", n), &a, |bench, a| {
            bench.iter(|| minpoly_mod(black_box(a)).unwrap())
        });
    }
    group.finish();
}

fn reconstruct(c: &mut Criterion) {
    let mut group = c.benchmark_group("reconstruct");
    group.sample_size(10);
    for &n in &[8usize, 24, 48] {
        let a = pseudo_random_matrix(n, 8, 11);
        group.bench_with_input(BenchmarkId::new("charpoly", n), &a, |bench, a| {
            bench.iter(|| reconstruct_charpoly(black_box(a), ComputeOptions::default()).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("minpoly", n), &a, |bench, a| {
            bench.iter(|| reconstruct_minpoly(black_box(a), ComputeOptions::default()).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, modular, reconstruct);
criterion_main!(benches);
