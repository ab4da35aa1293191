use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use qfdt::criteria::{score_fidelity, score_qig};
use qfdt::linalg::matrix_sqrt;
use qfdt::{fidelity, von_neumann_entropy, AmplitudeMode};
use qfdt_bench::{random_density, random_table};

fn kernels(c: &mut Criterion) {
    let mut group = c.benchmark_group("kernel");
    for dim in [2, 4, 8] {
        let a = random_density(dim, 1);
        let b = random_density(dim, 2);
        group.bench_with_input(BenchmarkId::new("matrix_sqrt", dim), &a, |bench, a| {
            bench.iter(|| matrix_sqrt(black_box(a.matrix())).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("fidelity", dim), &(a.clone(), b), |bench, (a, b)| {
            bench.iter(|| fidelity(black_box(a), black_box(b)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("entropy", dim), &a, |bench, a| {
            bench.iter(|| von_neumann_entropy(black_box(a)).unwrap())
        });
    }
    group.finish();
}

fn scores(c: &mut Criterion) {
    let mut group = c.benchmark_group("score");
    for (k, m) in [(2, 2), (4, 2), (8, 3)] {
        let t = random_table(k, m, 7);
        let id = format!("{k}x{m}");
        group.bench_with_input(BenchmarkId::new("fidelity", &id), &t, |bench, t| {
            bench.iter(|| score_fidelity(black_box(t), AmplitudeMode::Joint).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("qig", &id), &t, |bench, t| {
            bench.iter(|| score_qig(black_box(t), AmplitudeMode::Joint).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, kernels, scores);
criterion_main!(benches);
