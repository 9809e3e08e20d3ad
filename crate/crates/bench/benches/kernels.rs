use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use schur_core::flow::optimal_bound;
use schur_core::gamma2::schur_norm;
use schur_core::graphs::kneser_schur_norm;
use schur_core::symmetry::sign_matrix;
use schur_core::tpatterns::{pattern_builders, DiagonalKind, DiagonalSet};
use schur_core::{hermitian_eig, polar_absolute, DenseMatrix};

fn random_hermitian(rng: &mut ChaCha8Rng, n: usize, complex: bool) -> DenseMatrix {
    let mut m = DenseMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let im = if complex { rng.gen_range(-1.0..1.0) } else { 0.0 };
            m.set(i, j, Complex64::new(rng.gen_range(-1.0..1.0), im));
        }
    }
    m.hermitian_part()
}

fn bench_eigensolver(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut group = c.benchmark_group("jacobi_eig");
    for &n in &[8usize, 16, 32, 64] {
        let real = random_hermitian(&mut rng, n, false);
        group.bench_with_input(BenchmarkId::new("real", n), &real, |b, m| {
            b.iter(|| hermitian_eig(black_box(m)).unwrap())
        });
    }
    let cpx = random_hermitian(&mut rng, 16, true);
    group.bench_function("complex/16", |b| b.iter(|| hermitian_eig(black_box(&cpx)).unwrap()));
    group.finish();
}

fn bench_polar(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let t = random_hermitian(&mut rng, 24, true);
    c.bench_function("polar_absolute/24", |b| b.iter(|| polar_absolute(black_box(&t)).unwrap()));
}

fn bench_flow(c: &mut Criterion) {
    let lacunary = DiagonalSet::new((0..=8).map(|k| 1i64 << k));
    let sparse = pattern_builders(&lacunary, 512, DiagonalKind::Hankel);
    let dense = pattern_builders(&DiagonalSet::new(1..=48), 96, DiagonalKind::Hankel);
    let mut group = c.benchmark_group("optimal_bound");
    group.bench_function("hankel_lacunary_512", |b| {
        b.iter(|| optimal_bound(black_box(&sparse)))
    });
    group.bench_function("hankel_dense_96", |b| b.iter(|| optimal_bound(black_box(&dense))));
    group.finish();
}

fn bench_norms(c: &mut Criterion) {
    let mut group = c.benchmark_group("schur_norm");
    group.sample_size(20);

    let worked = DenseMatrix::from_real_rows(&[&[4.0, 3.0], &[3.0, 1.0]]);
    group.bench_function("worked_2x2", |b| {
        b.iter(|| schur_norm(black_box(&worked), 1e-6).unwrap())
    });

    // group-invariant input: certificates collapse without the SDP
    let circulant = sign_matrix(16);
    group.bench_function("sign_16_collapsed", |b| {
        b.iter(|| schur_norm(black_box(&circulant), 1e-6).unwrap())
    });

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut random = DenseMatrix::zeros(6, 6);
    for i in 0..6 {
        for j in 0..6 {
            random.set(i, j, Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        }
    }
    group.bench_function("random_complex_6", |b| {
        b.iter(|| schur_norm(black_box(&random), 1e-5).unwrap())
    });
    group.finish();
}

fn bench_exact(c: &mut Criterion) {
    c.bench_function("kneser_exact_norm/64", |b| b.iter(|| kneser_schur_norm(black_box(64))));
}

criterion_group!(benches, bench_eigensolver, bench_polar, bench_flow, bench_norms, bench_exact);
criterion_main!(benches);
