//! Cross-module invariants: transformations that must leave the
//! multiplier norm fixed, the agreement between the exact trace formula
//! and the numeric solver on commutant elements, and the quantitative
//! link between lacunary structure and flow decompositions.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use schur_core::gamma2::schur_norm;
use schur_core::symmetry::{commutant_norm, orbit_structure, GroupAction};
use schur_core::tpatterns::{
    hankel_classify, lacunary_decompose, pattern_builders, DiagonalKind, DiagonalSet,
};
use schur_core::{schur_product, DenseMatrix};

fn random_complex_matrix(rng: &mut ChaCha8Rng, n: usize) -> DenseMatrix {
    let mut m = DenseMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        }
    }
    m
}

fn random_permutation_matrix(rng: &mut ChaCha8Rng, n: usize) -> DenseMatrix {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let mut m = DenseMatrix::zeros(n, n);
    for (i, &p) in perm.iter().enumerate() {
        m.set(i, p, Complex64::ONE);
    }
    m
}

fn random_diagonal_unitary(rng: &mut ChaCha8Rng, n: usize) -> DenseMatrix {
    let mut m = DenseMatrix::zeros(n, n);
    for i in 0..n {
        let phase = rng.gen_range(0.0..(2.0 * std::f64::consts::PI));
        m.set(i, i, Complex64::new(0.0, phase).exp());
    }
    m
}

#[test]
fn norm_is_scale_equivariant() {
    let tol = 1e-5;
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..6 {
        let n = rng.gen_range(2..=5);
        let s = random_complex_matrix(&mut rng, n);
        let c = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        if c.norm() < 0.1 {
            continue;
        }
        let base = schur_norm(&s, tol).unwrap().value;
        let scaled = schur_norm(&s.scale(c), tol).unwrap().value;
        assert!(
            (scaled - c.norm() * base).abs() <= tol * (1.0 + c.norm()) * 3.0,
            "|c|·‖S‖ = {} vs ‖cS‖ = {scaled}",
            c.norm() * base
        );
    }
}

#[test]
fn norm_is_permutation_invariant() {
    let tol = 1e-5;
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..4 {
        let n = rng.gen_range(2..=5);
        let s = random_complex_matrix(&mut rng, n);
        let p = random_permutation_matrix(&mut rng, n);
        let q = random_permutation_matrix(&mut rng, n);
        let moved = p.mul(&s).unwrap().mul(&q).unwrap();
        let base = schur_norm(&s, tol).unwrap().value;
        let permuted = schur_norm(&moved, tol).unwrap().value;
        assert!((base - permuted).abs() <= 3.0 * tol, "{base} vs {permuted}");
    }
}

#[test]
fn norm_ignores_diagonal_unitary_conjugation() {
    let tol = 1e-5;
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for _ in 0..4 {
        let n = rng.gen_range(2..=5);
        let s = random_complex_matrix(&mut rng, n);
        let d = random_diagonal_unitary(&mut rng, n);
        let e = random_diagonal_unitary(&mut rng, n);
        let moved = d.mul(&s).unwrap().mul(&e).unwrap();
        let base = schur_norm(&s, tol).unwrap().value;
        let conjugated = schur_norm(&moved, tol).unwrap().value;
        assert!((base - conjugated).abs() <= 3.0 * tol, "{base} vs {conjugated}");
    }
}

#[test]
fn trace_formula_matches_the_numeric_solver_on_commutants() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    for action in [
        GroupAction::symmetric(4),
        GroupAction::symmetric(6),
        GroupAction::cyclic(5),
        GroupAction::cyclic(8),
    ] {
        let orbits = orbit_structure(&action);
        let coeffs: Vec<Complex64> = (0..orbits.n_orbits)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let exact = commutant_norm(&action, &coeffs).unwrap();

        let mut t = DenseMatrix::zeros(orbits.n_points, orbits.n_points);
        for (c, basis) in coeffs.iter().zip(&orbits.basis) {
            t = t.add(&basis.scale(*c)).unwrap();
        }
        let numeric = schur_norm(&t, 1e-5).unwrap().value;
        assert!(
            (exact - numeric).abs() <= 1e-4,
            "trace formula {exact} vs solver {numeric} on {} points",
            orbits.n_points
        );
    }
}

#[test]
fn lacunary_census_brackets_the_flow_bound() {
    // for random finite sets, the piece count p and the dyadic maximum L
    // quantitatively bracket the optimal decomposition bound:
    // ⌈L/4⌉ ≤ m ≤ 2p
    let mut rng = ChaCha8Rng::seed_from_u64(35);
    for trial in 0..200 {
        let size = rng.gen_range(1..=24);
        let values: Vec<i64> = (0..size).map(|_| rng.gen_range(1..=1024)).collect();
        let s = DiagonalSet::new(values);
        let report = lacunary_decompose(&s).unwrap();
        let pieces = report.pieces.len();
        assert!(pieces <= 2 * report.max_count, "piece bound violated on trial {trial}");

        let grid = 2 * s.max_abs() as usize;
        let classified = hankel_classify(&s, grid).unwrap();
        let m = classified.optimal_m;
        assert!(
            m <= 2 * pieces,
            "trial {trial}: m = {m} exceeds twice the piece count {pieces}"
        );
        assert!(
            4 * m >= report.max_count,
            "trial {trial}: m = {m} below the dyadic bound L/4 with L = {}",
            report.max_count
        );
    }
}

#[test]
fn row_bounded_toeplitz_indicator_norm() {
    // the all-ones multiplier on 𝒯(S) is row bounded by |S|, so its norm
    // stays within √|S|
    let tol = 1e-5;
    for values in [vec![0i64], vec![0, 2], vec![-1, 1, 3], vec![0, 1, 2, 4]] {
        let s = DiagonalSet::new(values.iter().copied());
        let grid = (3 * s.max_abs().max(1)) as usize;
        let pattern = pattern_builders(&s, grid, DiagonalKind::Toeplitz);
        let indicator = pattern.indicator();
        let report = schur_norm(&indicator, tol).unwrap();
        let root = (s.len() as f64).sqrt();
        assert!(
            report.value <= root + 1e-4,
            "‖1_𝒯(S)‖_m = {} exceeds √|S| = {root} for {values:?}",
            report.value
        );
    }
}

#[test]
fn schur_product_algebra_is_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(36);
    // commutativity is bit-exact for arbitrary entries
    let a = random_complex_matrix(&mut rng, 6);
    let b = random_complex_matrix(&mut rng, 6);
    assert_eq!(schur_product(&a, &b).unwrap(), schur_product(&b, &a).unwrap());

    // associativity is bit-exact once every intermediate product is
    // representable, so draw small dyadic entries
    let mut dyadic = |rng: &mut ChaCha8Rng| {
        let mut m = DenseMatrix::zeros(6, 6);
        for i in 0..6 {
            for j in 0..6 {
                let re = rng.gen_range(-32..=32) as f64 / 16.0;
                let im = rng.gen_range(-32..=32) as f64 / 16.0;
                m.set(i, j, Complex64::new(re, im));
            }
        }
        m
    };
    let (x, y, z) = (dyadic(&mut rng), dyadic(&mut rng), dyadic(&mut rng));
    assert_eq!(schur_product(&x, &y).unwrap(), schur_product(&y, &x).unwrap());
    let left = schur_product(&schur_product(&x, &y).unwrap(), &z).unwrap();
    let right = schur_product(&x, &schur_product(&y, &z).unwrap()).unwrap();
    assert_eq!(left, right);
}
