use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use diffnorm_bench::random_sequence;
use diffnorm_core::{
    build, gram, jacobi_eigen, oracle, pairwise_square_sum_bruteforce, pairwise_square_sum_closed,
};
use std::hint::black_box;

fn pairwise_sums(c: &mut Criterion) {
    let mut group = c.benchmark_group("pairwise_square_sum");
    for n in [16, 64, 256] {
        let seq = random_sequence(n, 1_000_000, n as u64);
        group.bench_with_input(BenchmarkId::new("bruteforce", n), &seq, |b, s| {
            b.iter(|| pairwise_square_sum_bruteforce(black_box(s)))
        });
        group.bench_with_input(BenchmarkId::new("closed", n), &seq, |b, s| {
            b.iter(|| pairwise_square_sum_closed(black_box(s)))
        });
    }
    group.finish();
}

fn exact_kernels(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact");
    for n in [8, 32, 64] {
        let m = build(&random_sequence(n, 1_000_000, 7 + n as u64));
        group.bench_with_input(BenchmarkId::new("rank", n), &m, |b, m| b.iter(|| black_box(m).exact_rank()));
        group.bench_with_input(BenchmarkId::new("cubic_identity", n), &m, |b, m| {
            b.iter(|| black_box(m).cubic_identity_holds())
        });
        group.bench_with_input(BenchmarkId::new("two_minor_sum", n), &m, |b, m| {
            b.iter(|| black_box(m).sum_principal_minors(2).unwrap())
        });
    }
    group.finish();
}

fn jacobi(c: &mut Criterion) {
    let mut group = c.benchmark_group("jacobi");
    for n in [8, 32, 64] {
        let g = gram(&build(&random_sequence(n, 10_000, 99 + n as u64))).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| jacobi_eigen(black_box(g), oracle::DEFAULT_TOL, oracle::DEFAULT_MAX_SWEEPS).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, pairwise_sums, exact_kernels, jacobi);
criterion_main!(benches);
