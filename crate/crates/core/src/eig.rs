//! Hermitian eigensolver (cyclic Jacobi), polar decomposition and the
//! operator norm.
//!
//! The solver is dependency-free and deterministic: rotations are applied
//! in a fixed row-cyclic order, so repeated runs on the same input produce
//! bit-identical output. Real symmetric input takes a pure `f64` path;
//! general Hermitian input uses unitary Jacobi rotations on the complex
//! matrix.

use num_complex::Complex64;

use crate::error::CoreError;
use crate::matrix::DenseMatrix;
use crate::tol;

/// Eigendecomposition of a Hermitian matrix.
///
/// Eigenvalues are real and sorted descending; `eigenvectors` holds the
/// matching orthonormal eigenvectors as columns.
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: DenseMatrix,
}

impl EigenDecomposition {
    /// Rebuild `V Λ V*`.
    pub fn reconstruct(&self) -> DenseMatrix {
        self.apply_spectral(|x| x)
    }

    /// Build `V f(Λ) V*` for a real spectral function `f`.
    pub fn apply_spectral(&self, f: impl Fn(f64) -> f64) -> DenseMatrix {
        let n = self.eigenvectors.rows();
        let mut out = DenseMatrix::zeros(n, n);
        for (k, &lambda) in self.eigenvalues.iter().enumerate() {
            let flam = f(lambda);
            if flam == 0.0 {
                continue;
            }
            for i in 0..n {
                let vi = self.eigenvectors.get(i, k);
                if vi.re == 0.0 && vi.im == 0.0 {
                    continue;
                }
                for j in 0..n {
                    let vj = self.eigenvectors.get(j, k).conj();
                    let add = vi * vj * flam;
                    out.set(i, j, out.get(i, j) + add);
                }
            }
        }
        out
    }
}

fn sgn(x: f64) -> f64 {
    if x < 0.0 {
        -1.0
    } else {
        1.0
    }
}

/// Jacobi tangent for the pivot `[[app, r], [r, aqq]]` with `r > 0`.
fn jacobi_t(app: f64, aqq: f64, r: f64) -> f64 {
    let theta = (aqq - app) / (2.0 * r);
    if theta.abs() > 1e150 {
        1.0 / (2.0 * theta)
    } else {
        sgn(theta) / (theta.abs() + theta.hypot(1.0))
    }
}

fn off_diag_sq_real(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            s += a[p * n + q] * a[p * n + q];
        }
    }
    2.0 * s
}

/// Cyclic Jacobi on a real symmetric matrix stored full, row-major.
/// Returns unsorted eigenvalues; `v` accumulates eigenvectors as columns.
fn jacobi_real(a: &mut [f64], v: &mut [f64], n: usize) -> Result<(), CoreError> {
    for p in 0..n {
        for q in 0..n {
            v[p * n + q] = if p == q { 1.0 } else { 0.0 };
        }
    }
    let fro: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    if fro == 0.0 {
        return Ok(());
    }
    let stop = (tol::JACOBI_OFF_REL * fro) * (tol::JACOBI_OFF_REL * fro);

    for _ in 0..tol::JACOBI_MAX_SWEEPS {
        if off_diag_sq_real(a, n) <= stop {
            return Ok(());
        }
        for p in 0..(n - 1) {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let t = jacobi_t(a[p * n + p], a[q * n + q], apq);
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                a[p * n + p] -= t * apq;
                a[q * n + q] += t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                    a[p * n + k] = a[k * n + p];
                    a[q * n + k] = a[k * n + q];
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    if off_diag_sq_real(a, n) <= stop {
        Ok(())
    } else {
        Err(CoreError::NoConvergence { sweeps: tol::JACOBI_MAX_SWEEPS })
    }
}

fn off_diag_sq_complex(a: &[Complex64], n: usize) -> f64 {
    let mut s = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            s += a[p * n + q].norm_sqr();
        }
    }
    2.0 * s
}

/// Cyclic Jacobi with unitary plane rotations on a Hermitian matrix.
///
/// The pivot entry `a_pq = r·e^{iφ}` is zeroed by conjugating with
/// `D·G`, where `D` rotates the `p`-th coordinate by the phase `e^{iφ}`
/// and `G` is the real rotation for the phase-aligned 2×2 block.
fn jacobi_hermitian(a: &mut [Complex64], v: &mut [Complex64], n: usize) -> Result<(), CoreError> {
    for p in 0..n {
        for q in 0..n {
            v[p * n + q] = if p == q { Complex64::ONE } else { Complex64::ZERO };
        }
    }
    let fro: f64 = a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if fro == 0.0 {
        return Ok(());
    }
    let stop = (tol::JACOBI_OFF_REL * fro) * (tol::JACOBI_OFF_REL * fro);

    for _ in 0..tol::JACOBI_MAX_SWEEPS {
        if off_diag_sq_complex(a, n) <= stop {
            return Ok(());
        }
        for p in 0..(n - 1) {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                let r = apq.norm();
                if r == 0.0 {
                    continue;
                }
                let phase = apq / r;
                let t = jacobi_t(a[p * n + p].re, a[q * n + q].re, r);
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // column-p multiplier carries the phase: U_pp = c·e^{iφ},
                // U_pq = s·e^{iφ}, U_qp = −s, U_qq = c
                let cp = phase * c;
                let sp = phase * s;

                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                a[p * n + p] = Complex64::new(app - t * r, 0.0);
                a[q * n + q] = Complex64::new(aqq + t * r, 0.0);
                a[p * n + q] = Complex64::ZERO;
                a[q * n + p] = Complex64::ZERO;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = akp * cp - akq * s;
                    a[k * n + q] = akp * sp + akq * c;
                    a[p * n + k] = a[k * n + p].conj();
                    a[q * n + k] = a[k * n + q].conj();
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = vkp * cp - vkq * s;
                    v[k * n + q] = vkp * sp + vkq * c;
                }
            }
        }
    }
    if off_diag_sq_complex(a, n) <= stop {
        Ok(())
    } else {
        Err(CoreError::NoConvergence { sweeps: tol::JACOBI_MAX_SWEEPS })
    }
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Fails with `NotHermitian` when `‖T − T*‖_F > 1e-12·‖T‖_F` and with
/// `NoConvergence` if the sweep budget is exhausted. Eigenvalues come back
/// sorted descending with orthonormal eigenvector columns.
pub fn hermitian_eig(t: &DenseMatrix) -> Result<EigenDecomposition, CoreError> {
    if !t.is_square() {
        return Err(CoreError::NotSquare { rows: t.rows(), cols: t.cols() });
    }
    let dev = t.sub(&t.adjoint()).expect("same shape").frobenius_norm();
    let limit = tol::HERMITIAN_REL * t.frobenius_norm();
    if dev > limit {
        return Err(CoreError::NotHermitian { deviation: dev, limit });
    }
    let h = t.hermitian_part();
    let n = h.rows();

    let (mut values, vecs) = if h.is_real() {
        let mut a: Vec<f64> = h.data().iter().map(|z| z.re).collect();
        let mut v = vec![0.0; n * n];
        jacobi_real(&mut a, &mut v, n)?;
        let values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
        let vecs: Vec<Complex64> = v.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        (values, vecs)
    } else {
        let mut a: Vec<Complex64> = h.data().to_vec();
        let mut v = vec![Complex64::ZERO; n * n];
        jacobi_hermitian(&mut a, &mut v, n)?;
        let values: Vec<f64> = (0..n).map(|i| a[i * n + i].re).collect();
        (values, v)
    };

    // sort descending, stable in the original column order on ties
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[j].partial_cmp(&values[i]).unwrap());
    let sorted_values: Vec<f64> = order.iter().map(|&k| values[k]).collect();
    let mut sorted_vecs = DenseMatrix::zeros(n, n);
    for (col, &k) in order.iter().enumerate() {
        for i in 0..n {
            sorted_vecs.set(i, col, vecs[i * n + k]);
        }
    }
    values = sorted_values;

    Ok(EigenDecomposition { eigenvalues: values, eigenvectors: sorted_vecs })
}

/// Largest singular value, computed as `sqrt(λ_max(T*T))`.
pub fn operator_norm(t: &DenseMatrix) -> f64 {
    if t.is_zero() {
        return 0.0;
    }
    // square the smaller side
    let gram = if t.rows() >= t.cols() {
        t.adjoint().mul(t).expect("shape")
    } else {
        t.mul(&t.adjoint()).expect("shape")
    };
    let eig = hermitian_eig(&gram).expect("Gram matrix eigensolve failed");
    eig.eigenvalues[0].max(0.0).sqrt()
}

/// One singular triple: `T v = σ u` with unit `u`, `v`.
#[derive(Clone, Debug)]
pub struct SingularTriple {
    pub sigma: f64,
    pub left: Vec<Complex64>,
    pub right: Vec<Complex64>,
}

/// Singular triples of a (possibly rectangular) matrix with `σ` above
/// `cutoff_rel·σ_max`, sorted descending.
///
/// Computed from the Hermitian dilation `[[0, T], [T*, 0]]`, whose positive
/// spectrum carries the singular triples without squaring the condition
/// number: the eigenvector at `+σ` is `(u; v)/√2`.
pub fn singular_triples(t: &DenseMatrix, cutoff_rel: f64) -> Result<Vec<SingularTriple>, CoreError> {
    if t.is_zero() {
        return Ok(Vec::new());
    }
    let (p, q) = (t.rows(), t.cols());
    let mut dilation = DenseMatrix::zeros(p + q, p + q);
    for i in 0..p {
        for j in 0..q {
            dilation.set(i, p + j, t.get(i, j));
            dilation.set(p + j, i, t.get(i, j).conj());
        }
    }
    let eig = hermitian_eig(&dilation)?;
    let sigma_max = eig.eigenvalues[0].max(0.0);
    let cutoff = cutoff_rel * sigma_max;

    let sqrt2 = std::f64::consts::SQRT_2;
    let mut out = Vec::new();
    for (k, &sigma) in eig.eigenvalues.iter().enumerate() {
        if sigma <= cutoff {
            break; // sorted descending
        }
        let left: Vec<Complex64> = (0..p).map(|i| eig.eigenvectors.get(i, k) * sqrt2).collect();
        let right: Vec<Complex64> = (0..q).map(|j| eig.eigenvectors.get(p + j, k) * sqrt2).collect();
        out.push(SingularTriple { sigma, left, right });
    }
    Ok(out)
}

/// Polar decomposition `T = W·|T|` of a square matrix.
///
/// Returns `(|T|, W)` where `|T| = (T*T)^{1/2}` is PSD and `W` is a partial
/// isometry on the range of `|T|` (zero on its kernel).
pub fn polar_absolute(t: &DenseMatrix) -> Result<(DenseMatrix, DenseMatrix), CoreError> {
    if !t.is_square() {
        return Err(CoreError::NotSquare { rows: t.rows(), cols: t.cols() });
    }
    let n = t.rows();
    let mut abs_t = DenseMatrix::zeros(n, n);
    let mut w = DenseMatrix::zeros(n, n);
    for triple in singular_triples(t, tol::POLAR_RANK_REL)? {
        let (u, v) = (&triple.left, &triple.right);
        for i in 0..n {
            for j in 0..n {
                let vvt = v[i] * v[j].conj();
                abs_t.set(i, j, abs_t.get(i, j) + vvt * triple.sigma);
                let uvt = u[i] * v[j].conj();
                w.set(i, j, w.get(i, j) + uvt);
            }
        }
    }
    Ok((abs_t, w))
}
