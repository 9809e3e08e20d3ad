//! Acceptance suite: one test per criterion, each printing a PASS line
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Tolerances are pinned here and in `schur_core::tol`; nothing is left
//! to later calibration.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use schur_core::flow::{brute_force_best_m, decompose_pattern, optimal_bound, Decompose};
use schur_core::gamma2::{bignorm_bounds, schur_norm, upper_bound_polar};
use schur_core::graphs::{
    johnson_adjacency, kneser_eigenvalues, kneser_product_form, kneser_schur_norm,
    rational_exceeds, scheme_eigen_dims, verify_scheme, JohnsonSpec,
};
use schur_core::symmetry::{cyclic_example_norm, mathias_norm, sign_matrix, sign_matrix_norm};
use schur_core::tpatterns::{flat_sign_search, hankel_classify, DiagonalSet};
use schur_core::{hermitian_eig, DenseMatrix, NonnegMatrix, Pattern};

const SDP_TOL: f64 = 1e-4;

fn assert_close(got: f64, want: f64, tol: f64, what: &str) {
    assert!((got - want).abs() <= tol, "{what}: got {got}, want {want} (tol {tol})");
}

fn ones_minus(n: usize, c: f64) -> DenseMatrix {
    DenseMatrix::ones(n, n)
        .sub(&DenseMatrix::identity(n).scale(Complex64::new(c, 0.0)))
        .unwrap()
}

fn random_pattern(rng: &mut ChaCha8Rng, max_total: usize) -> Pattern {
    let rows = rng.gen_range(1..max_total);
    let cols = rng.gen_range(1..=(max_total - rows).max(1));
    let density = rng.gen_range(0.05..0.95);
    let entries: Vec<(usize, usize)> = (0..rows)
        .flat_map(|i| (0..cols).map(move |j| (i, j)))
        .filter(|_| rng.gen_bool(density))
        .collect();
    Pattern::new(rows, cols, entries).unwrap()
}

fn random_complex_matrix(rng: &mut ChaCha8Rng, n: usize) -> DenseMatrix {
    let mut m = DenseMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        }
    }
    m
}

#[test]
fn criterion_01_exact_vs_sdp_worked_values() {
    let s = DenseMatrix::from_real_rows(&[&[4.0, 3.0], &[3.0, 1.0]]);
    let report = schur_norm(&s, 1e-5).unwrap();
    assert_close(report.value, 4.0, SDP_TOL, "‖[[4,3],[3,1]]‖_m");

    for n in 2..=8usize {
        let t = ones_minus(n, 1.0);
        let report = schur_norm(&t, 1e-5).unwrap();
        let want = 2.0 - 2.0 / n as f64;
        assert_close(report.value, want, SDP_TOL, &format!("off-diagonal norm, n={n}"));
    }

    let shifted = ones_minus(4, 2.0);
    let report = schur_norm(&shifted, 1e-5).unwrap();
    assert_close(report.value, 2.0, SDP_TOL, "shifted 4×4 norm");

    println!("ACCEPTANCE 01 PASS: SDP reproduces the worked norms (4, 2−2/n, 2) within 1e-4");
}

#[test]
fn criterion_02_kneser_chain() {
    // n = 1: triangle
    let exact1 = kneser_schur_norm(1);
    assert_eq!(exact1, BigRational::new(BigInt::from(4), BigInt::from(3)));
    let as_float = 4.0 / 3.0;
    assert_close(cyclic_example_norm(3), as_float, 1e-12, "cycle formula at n=3");
    let triangle = johnson_adjacency(&JohnsonSpec::kneser(3, 1).unwrap()).unwrap();
    assert_close(mathias_norm(&triangle).unwrap(), as_float, 1e-12, "trace formula, triangle");
    let report = schur_norm(&triangle, 1e-5).unwrap();
    assert_close(report.value, as_float, SDP_TOL, "SDP, triangle");

    // n = 2: Petersen graph
    let exact2 = kneser_schur_norm(2);
    assert_eq!(exact2, BigRational::new(BigInt::from(8), BigInt::from(5)));
    let petersen = johnson_adjacency(&JohnsonSpec::kneser(5, 2).unwrap()).unwrap();
    assert_eq!(petersen.rows(), 10);
    assert_close(mathias_norm(&petersen).unwrap(), 1.6, 1e-12, "trace formula, Petersen");
    let report = schur_norm(&petersen, 1e-5).unwrap();
    assert_close(report.value, 1.6, SDP_TOL, "SDP, Petersen");

    println!("ACCEPTANCE 02 PASS: Kneser chain 4/3 and 8/5 agree exactly and within 1e-4 (SDP)");
}

#[test]
fn criterion_03_eigenstructure() {
    for n in 1..=3u32 {
        let v = 2 * n + 1;
        let adj = johnson_adjacency(&JohnsonSpec::kneser(v, n).unwrap()).unwrap();
        let eig = hermitian_eig(&adj).unwrap();
        let dims: Vec<usize> = scheme_eigen_dims(v, n)
            .iter()
            .map(|d| usize::try_from(d).unwrap())
            .collect();
        let mut expected: Vec<f64> = kneser_eigenvalues(n)
            .iter()
            .zip(&dims)
            .flat_map(|(&val, &dim)| std::iter::repeat(val as f64).take(dim))
            .collect();
        expected.sort_by(|a, b| b.partial_cmp(a).unwrap());
        assert_eq!(eig.eigenvalues.len(), expected.len());
        for (got, want) in eig.eigenvalues.iter().zip(&expected) {
            assert!((got - want).abs() <= 1e-8, "K({v},{n}) spectrum: {got} vs {want}");
        }
    }

    for (v, n) in [(3, 1), (4, 2), (5, 2), (6, 3), (7, 3)] {
        let report = verify_scheme(v, n).unwrap();
        assert!(report.all_ok(), "scheme ({v},{n}) violations: {:?}", report.violations);
    }

    println!(
        "ACCEPTANCE 03 PASS: Kneser spectra match the eigenvalue table to 1e-8; \
         scheme identities verify exactly for the five (v,n) cases"
    );
}

#[test]
fn criterion_04_hilbert_transform_circulant() {
    for n in 1..=32usize {
        let closed = sign_matrix_norm(n as u64);
        if n == 1 {
            assert_eq!(closed, 0.0);
            continue; // the 1×1 sign matrix is zero: nothing to compare
        }
        let trace = mathias_norm(&sign_matrix(n)).unwrap();
        assert_close(trace, closed, 1e-9, &format!("sign matrix, n={n}"));
    }
    for n in 1..=8usize {
        let report = schur_norm(&sign_matrix(n), 1e-5).unwrap();
        assert_close(report.value, sign_matrix_norm(n as u64), SDP_TOL, &format!("SDP, n={n}"));
    }

    println!(
        "ACCEPTANCE 04 PASS: cotangent formula = trace formula to 1e-9 (n ≤ 32) \
         and = SDP value to 1e-4 (n ≤ 8)"
    );
}

#[test]
fn criterion_05_flow_oracle_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0;
    while checked < 500 {
        let p = random_pattern(&mut rng, 12);
        let (m, split) = optimal_bound(&p);
        split.validate(&p).unwrap_or_else(|e| panic!("split invalid: {e} on {p:?}"));
        let oracle = brute_force_best_m(&p).unwrap();
        assert_eq!(m, oracle, "flow vs enumeration on {p:?}");
        if m > 0 {
            match decompose_pattern(&p, m - 1, m - 1) {
                Decompose::Cut(cut) => cut.validate_pattern(&p, m - 1, m - 1).unwrap(),
                Decompose::Split(_) => panic!("feasible below the optimum on {p:?}"),
            }
        }
        checked += 1;
    }

    println!(
        "ACCEPTANCE 05 PASS: optimal bound equals the rectangle-enumeration oracle on \
         {checked} random patterns; all splits and cuts self-validate"
    );
}

#[test]
fn criterion_06_sandwich_property() {
    let tol = 1e-5;
    let mut rng = ChaCha8Rng::seed_from_u64(7071);

    for trial in 0..200 {
        let n = 2 + trial % 7; // sizes 2..=8
        let s = random_complex_matrix(&mut rng, n);
        let report = schur_norm(&s, tol).unwrap();
        report.upper_cert.check(&s).unwrap();
        report.lower_cert.check(&s).unwrap();
        let polar = upper_bound_polar(&s).unwrap();
        assert!(
            report.lower_cert.bound <= report.value + tol,
            "witness exceeds value on trial {trial}"
        );
        assert!(
            report.value <= report.upper_cert.bound.min(polar) + tol,
            "value exceeds certified upper bounds on trial {trial}"
        );
    }

    // positive semidefinite inputs: the norm is the largest diagonal entry
    for trial in 0..40 {
        let n = 2 + trial % 6;
        let m = random_complex_matrix(&mut rng, n);
        let psd = m.mul(&m.adjoint()).unwrap().hermitian_part();
        let want = (0..n).map(|i| psd.get(i, i).re).fold(0.0, f64::max);
        let report = schur_norm(&psd, tol).unwrap();
        assert_close(report.value, want, SDP_TOL, "PSD norm = max diagonal");
    }

    println!(
        "ACCEPTANCE 06 PASS: witness ≤ value ≤ min(factorization, polar) + tol on 200 \
         random complex matrices; PSD inputs return the max diagonal"
    );
}

#[test]
fn criterion_07_bignorm_witness() {
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    for trial in 0..500 {
        let m = 1 + trial % 12;
        let mut mat = DenseMatrix::zeros(m, m);
        let density = rng.gen_range(0.2..1.0);
        let mut any = false;
        for i in 0..m {
            for j in 0..m {
                if rng.gen_bool(density) {
                    mat.set(i, j, Complex64::new(rng.gen_range(0.0..3.0), 0.0));
                    any = true;
                }
            }
        }
        if !any {
            mat.set(0, 0, Complex64::ONE);
        }
        let a = NonnegMatrix::new(mat).unwrap();
        let bounds = bignorm_bounds(&a).unwrap();
        assert!(
            bounds.z_witness >= (bounds.alpha / 2.0).sqrt() - 1e-9,
            "trial {trial}: z = {} below √(α/2) = {}",
            bounds.z_witness,
            (bounds.alpha / 2.0).sqrt()
        );
        assert!(bounds.guaranteed_lower <= bounds.z_witness + 1e-9);
    }

    println!("ACCEPTANCE 07 PASS: z-witness ≥ √(α/2) − 1e-9 on 500 random nonnegative matrices");
}

#[test]
fn criterion_08_asymptotics() {
    let limit = 4.0 / std::f64::consts::PI;
    for n in (3..=48u64).step_by(2) {
        assert!(cyclic_example_norm(n) > cyclic_example_norm(n + 2), "odd cycles decrease");
        assert!(cyclic_example_norm(n) > limit);
    }
    for n in (4..=48u64).step_by(2) {
        assert!(cyclic_example_norm(n) < cyclic_example_norm(n + 2), "even cycles increase");
        assert!(cyclic_example_norm(n) < limit);
    }

    for n in 1..=20u32 {
        let norm = kneser_schur_norm(n);
        assert_eq!(norm, kneser_product_form(n), "product identity at n = {n}");
        let threshold = 0.5 * ((2 * n + 3) as f64).ln();
        assert!(rational_exceeds(&norm, threshold), "log bound at n = {n}");
    }

    println!(
        "ACCEPTANCE 08 PASS: cycle norms approach 4/π monotonically by parity (n ≤ 50); \
         Kneser norms exceed ½·log(2n+3) exactly (n ≤ 20)"
    );
}

#[test]
fn criterion_09_flat_signs() {
    let s = DiagonalSet::new(0..8);
    let threshold = (2.0 * 8.0f64).sqrt(); // √(2n) = 4

    // exhaustive oracle: at least one of the 2⁸ sign patterns meets the
    // bound on the same sampled sup
    let grid = 128;
    let mut best_exhaustive = f64::INFINITY;
    for mask in 0u32..256 {
        let signs: Vec<i8> =
            (0..8).map(|k| if mask & (1 << k) != 0 { 1 } else { -1 }).collect();
        let sup = sampled_sup_oracle(s.values(), &signs, grid);
        best_exhaustive = best_exhaustive.min(sup);
    }
    assert!(
        best_exhaustive <= threshold,
        "exhaustive minimum {best_exhaustive} misses the √(2n) bound {threshold}"
    );

    let result = flat_sign_search(&s, 20_000, grid, 1).unwrap();
    assert!(result.sup_norm <= threshold, "search found only {}", result.sup_norm);
    // pinned regression value for this seed
    assert_close(result.sup_norm, 3.645031259807217, 1e-9, "pinned sup for seed 1");
    assert_eq!(result.signs, vec![-1, -1, -1, 1, -1, 1, 1, -1]);
    // the search can only sit above the exhaustive optimum
    assert!(result.sup_norm + 1e-12 >= best_exhaustive);

    println!(
        "ACCEPTANCE 09 PASS: flat-sign search (seed 1) reaches sup {:.6} ≤ 4; \
         exhaustive oracle confirms the bound is attainable",
        result.sup_norm
    );
}

/// Independent sup sampler for the exhaustive oracle: same uniform grid,
/// no refinement, written against the defining sum rather than the
/// library path.
fn sampled_sup_oracle(values: &[i64], signs: &[i8], grid: usize) -> f64 {
    let mut best = 0.0f64;
    for g in 0..grid {
        let theta = 2.0 * std::f64::consts::PI * g as f64 / grid as f64;
        let (mut re, mut im) = (0.0, 0.0);
        for (&s, &sign) in values.iter().zip(signs) {
            let phase = s as f64 * theta;
            re += sign as f64 * phase.cos();
            im += sign as f64 * phase.sin();
        }
        best = best.max(re.hypot(im));
    }
    best
}

#[test]
fn criterion_10_hankel_classification() {
    // powers of two: lacunary, so two pieces and m ≤ 2
    let powers = DiagonalSet::new((0..=10).map(|k| 1i64 << k));
    let report = hankel_classify(&powers, 2048).unwrap();
    assert!(report.bounded);
    assert!(report.optimal_m <= 2, "lacunary set should split at m ≤ 2, got {}", report.optimal_m);

    // a full range grows: the dyadic rectangle bound forces m ≥ 8
    let dense = DiagonalSet::new(1..=64);
    let report = hankel_classify(&dense, 128).unwrap();
    let witness = report.witness.expect("dyadic witness exists");
    let rectangle_bound = (witness.a_k as f64 / 4.0).ceil() as usize;
    assert!(witness.a_k >= 32, "top dyadic interval holds 32 elements");
    assert!(
        report.optimal_m >= 8 && report.optimal_m >= rectangle_bound,
        "m = {} vs rectangle bound {rectangle_bound}",
        report.optimal_m
    );

    println!(
        "ACCEPTANCE 10 PASS: powers of two classify bounded with m ≤ 2; the 1..64 range \
         yields m = {} ≥ 8, matching the a_k/4 rectangle bound",
        report.optimal_m
    );
}
