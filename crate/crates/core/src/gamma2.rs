//! Schur multiplier norms of explicit matrices, with independently
//! re-checkable certificates.
//!
//! The norm is characterized by a PSD block completion: `‖S‖_m ≤ t` exactly
//! when some Hermitian `[[P, S], [S*, Q]]` with diagonal entries ≤ t is
//! positive semidefinite.
//!
//! `schur_norm` brackets the value between certificates that are valid at
//! every stage:
//! * upper — factorization vectors with `⟨x_i, y_j⟩ = s_ij`, giving
//!   `‖S‖_m ≤ max‖x_i‖·max‖y_j‖`; candidates come from the polar
//!   decomposition, the raw rows/columns, and the completion computed by
//!   the barrier solver when the cheap bounds leave a gap;
//! * lower — a test matrix `B` with `‖S∘B‖/‖B‖ ≤ ‖S‖_m` by definition of
//!   the multiplier norm, sharpened by a monotone ascent whose every
//!   iterate stays a valid witness.
//!
//! Group-invariant and positive semidefinite inputs collapse the bracket
//! immediately. `extract_haagerup` answers level-feasibility queries by
//! Dykstra alternating projections between the PSD cone and the admissible
//! set, deferring to the barrier optimum near the critical level where
//! projections converge too slowly to decide.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::eig::{hermitian_eig, operator_norm, polar_absolute, singular_triples};
use crate::error::CoreError;
use crate::matrix::{diag_expectation, schur_product, DenseMatrix, NonnegMatrix};
use crate::sdp;
use crate::tol;

#[derive(Debug, Error)]
pub enum Gamma2Error {
    #[error("tolerance {0} is below the supported minimum {min}", min = tol::SCHUR_NORM_MIN_TOL)]
    BadTolerance(f64),

    #[error("matrix dimension {dim} exceeds the solver limit {limit}")]
    TooLarge { dim: usize, limit: usize },

    #[error("no PSD completion exists at level t = {level}")]
    NotFeasible { level: f64 },

    #[error("test matrix must be nonzero")]
    ZeroTest,

    #[error("matrix has no nonzero entries")]
    EmptyMatrix,

    #[error("solver could not certify the norm; best bracket [{lower}, {upper}]")]
    NoConvergence { lower: f64, upper: f64 },

    #[error(transparent)]
    Core(#[from] CoreError),
}

/// Factorization vectors `x_i`, `y_j` with `⟨x_i, y_j⟩ = s_ij`; any such
/// family certifies `‖S‖_m ≤ max_i ‖x_i‖ · max_j ‖y_j‖`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HaagerupVectors {
    #[serde(rename = "x")]
    pub x_vectors: Vec<Vec<(f64, f64)>>,
    #[serde(rename = "y")]
    pub y_vectors: Vec<Vec<(f64, f64)>>,
    pub bound: f64,
}

impl HaagerupVectors {
    fn vec_norm(v: &[(f64, f64)]) -> f64 {
        v.iter().map(|&(re, im)| re * re + im * im).sum::<f64>().sqrt()
    }

    fn inner(x: &[(f64, f64)], y: &[(f64, f64)]) -> Complex64 {
        x.iter()
            .zip(y)
            .map(|(&(xr, xi), &(yr, yi))| Complex64::new(xr, xi).conj() * Complex64::new(yr, yi))
            .sum()
    }

    /// Recomputes the certificate from scratch: inner products must
    /// reproduce the multiplier entries to 1e-6 and the stated bound must
    /// match the vector norms.
    pub fn check(&self, s: &DenseMatrix) -> Result<(), String> {
        if self.x_vectors.len() != s.rows() || self.y_vectors.len() != s.cols() {
            return Err("vector counts do not match the matrix shape".into());
        }
        for (i, x) in self.x_vectors.iter().enumerate() {
            for (j, y) in self.y_vectors.iter().enumerate() {
                let got = Self::inner(x, y);
                let want = s.get(i, j);
                if (got - want).norm() > tol::HAAGERUP_REPRO_ABS {
                    return Err(format!(
                        "⟨x_{i}, y_{j}⟩ = {got} does not reproduce s_ij = {want}"
                    ));
                }
            }
        }
        let max_x = self.x_vectors.iter().map(|v| Self::vec_norm(v)).fold(0.0, f64::max);
        let max_y = self.y_vectors.iter().map(|v| Self::vec_norm(v)).fold(0.0, f64::max);
        if (max_x * max_y - self.bound).abs() > 1e-9 * (1.0 + self.bound) {
            return Err(format!("stated bound {} but norms give {}", self.bound, max_x * max_y));
        }
        Ok(())
    }
}

/// Lower-bound witness: a nonzero test matrix `B` and the value
/// `‖S∘B‖/‖B‖`, which never exceeds the multiplier norm.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Witness {
    #[serde(rename = "B")]
    pub b: DenseMatrix,
    pub bound: f64,
}

impl Witness {
    /// Recomputes `‖S∘B‖/‖B‖` using only core operations.
    pub fn check(&self, s: &DenseMatrix) -> Result<(), String> {
        let denom = operator_norm(&self.b);
        if denom <= 0.0 {
            return Err("witness matrix is zero".into());
        }
        let bound = operator_norm(&schur_product(s, &self.b).map_err(|e| e.to_string())?) / denom;
        if (bound - self.bound).abs() > 1e-8 * (1.0 + self.bound) {
            return Err(format!("stated bound {} but recomputation gives {bound}", self.bound));
        }
        Ok(())
    }
}

/// Computed multiplier norm with a bracketing pair of certificates.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NormReport {
    pub value: f64,
    pub tol: f64,
    #[serde(rename = "upper")]
    pub upper_cert: HaagerupVectors,
    #[serde(rename = "lower")]
    pub lower_cert: Witness,
}

// ---------------------------------------------------------------------
// feasibility of the block completion at a given level
// ---------------------------------------------------------------------

enum Probe {
    /// A PSD matrix whose admissible-set distance passed the threshold.
    Feasible(DenseMatrix),
    /// The projection distance plateaued at a positive value.
    Infeasible,
    /// Iteration cap exhausted with the gap still shrinking.
    Stalled,
}

/// Projection onto the admissible set: Hermitian, 12-block pinned to `S`,
/// real diagonal clamped to ≤ t.
fn project_admissible(x: &DenseMatrix, s: &DenseMatrix, t: f64) -> DenseMatrix {
    let p = s.rows();
    let mut y = x.hermitian_part();
    for i in 0..p {
        for j in 0..s.cols() {
            y.set(i, p + j, s.get(i, j));
            y.set(p + j, i, s.get(i, j).conj());
        }
    }
    let d = y.rows();
    for i in 0..d {
        let re = y.get(i, i).re.min(t);
        y.set(i, i, Complex64::new(re, 0.0));
    }
    y
}

/// Projection onto the PSD cone: clamp negative eigenvalues.
fn project_psd(x: &DenseMatrix) -> Result<DenseMatrix, CoreError> {
    let eig = hermitian_eig(&x.hermitian_part())?;
    Ok(eig.apply_spectral(|lambda| lambda.max(0.0)))
}

/// Dykstra alternating projections between the PSD cone and the
/// admissible set at level `t`.
fn probe_level(s: &DenseMatrix, t: f64, cap: usize, eps: f64) -> Result<Probe, Gamma2Error> {
    let p = s.rows();
    let q = s.cols();
    let d = p + q;
    if t < 0.0 {
        return Ok(Probe::Infeasible);
    }

    // start inside the admissible set
    let mut x = DenseMatrix::zeros(d, d);
    for i in 0..d {
        x.set(i, i, Complex64::new(t, 0.0));
    }
    x = project_admissible(&x, s, t);

    let mut corr_psd = DenseMatrix::zeros(d, d);
    let mut corr_adm = DenseMatrix::zeros(d, d);
    let mut window_gap = f64::INFINITY;

    for iter in 0..cap {
        let y = project_psd(&x.add(&corr_psd)?)?;
        corr_psd = x.add(&corr_psd)?.sub(&y)?;
        let x_next = project_admissible(&y.add(&corr_adm)?, s, t);
        corr_adm = y.add(&corr_adm)?.sub(&x_next)?;

        let gap = x_next.sub(&y)?.frobenius_norm();
        if gap <= eps {
            return Ok(Probe::Feasible(y));
        }
        if iter % tol::DYKSTRA_PLATEAU_WINDOW == tol::DYKSTRA_PLATEAU_WINDOW - 1 {
            if window_gap.is_finite() && window_gap - gap <= tol::DYKSTRA_PLATEAU_REL * window_gap {
                return Ok(Probe::Infeasible);
            }
            window_gap = gap;
        }
        x = x_next;
    }
    Ok(Probe::Stalled)
}

/// Factor a (numerically) PSD block completion into Haagerup vectors.
fn factor_completion(
    completion: &DenseMatrix,
    p: usize,
    q: usize,
) -> Result<HaagerupVectors, Gamma2Error> {
    let eig = hermitian_eig(&completion.hermitian_part())?;
    let d = completion.rows();
    // F = Λ^{1/2} V*, so F*F reproduces the completion; vectors are columns
    let mut columns: Vec<Vec<(f64, f64)>> = vec![Vec::with_capacity(d); d];
    for (k, &lambda) in eig.eigenvalues.iter().enumerate() {
        let root = lambda.max(0.0).sqrt();
        for (col, slot) in columns.iter_mut().enumerate() {
            let f = eig.eigenvectors.get(col, k).conj() * root;
            slot.push((f.re, f.im));
        }
    }
    let x_vectors: Vec<_> = columns[..p].to_vec();
    let y_vectors: Vec<_> = columns[p..p + q].to_vec();
    let max_x = x_vectors.iter().map(|v| HaagerupVectors::vec_norm(v)).fold(0.0, f64::max);
    let max_y = y_vectors.iter().map(|v| HaagerupVectors::vec_norm(v)).fold(0.0, f64::max);
    Ok(HaagerupVectors { x_vectors, y_vectors, bound: max_x * max_y })
}

/// Haagerup vectors reading the rows directly: `x_i = conj(row i)`,
/// `y_j = e_j`, certifying the max row ℓ²-norm; `transpose` swaps the
/// roles and certifies the max column norm instead.
fn row_vectors(s: &DenseMatrix, transpose: bool) -> HaagerupVectors {
    let (p, q) = (s.rows(), s.cols());
    let mut x_vectors = Vec::with_capacity(p);
    for i in 0..p {
        let v: Vec<(f64, f64)> = (0..q)
            .map(|j| {
                let z = s.get(i, j).conj();
                (z.re, z.im)
            })
            .collect();
        x_vectors.push(v);
    }
    let y_vectors: Vec<Vec<(f64, f64)>> = (0..q)
        .map(|j| (0..q).map(|k| ((k == j) as u8 as f64, 0.0)).collect())
        .collect();
    let (x_vectors, y_vectors) = if transpose {
        // x_i = e_i, y_j = column j: ⟨x_i, y_j⟩ = s_ij as well
        let basis: Vec<Vec<(f64, f64)>> =
            (0..p).map(|i| (0..p).map(|k| ((k == i) as u8 as f64, 0.0)).collect()).collect();
        let cols: Vec<Vec<(f64, f64)>> = (0..q)
            .map(|j| {
                (0..p)
                    .map(|i| {
                        let z = s.get(i, j);
                        (z.re, z.im)
                    })
                    .collect()
            })
            .collect();
        (basis, cols)
    } else {
        (x_vectors, y_vectors)
    };
    let max_x = x_vectors.iter().map(|v| HaagerupVectors::vec_norm(v)).fold(0.0, f64::max);
    let max_y = y_vectors.iter().map(|v| HaagerupVectors::vec_norm(v)).fold(0.0, f64::max);
    HaagerupVectors { x_vectors, y_vectors, bound: max_x * max_y }
}

/// Haagerup vectors from the polar decomposition: `x_i = |T|^{1/2}W*e_i`,
/// `y_j = |T|^{1/2}e_j`, which certify the diagonal bound
/// `‖Δ(|T*|)‖^{1/2}·‖Δ(|T|)‖^{1/2}`.
fn polar_vectors(s: &DenseMatrix) -> Result<HaagerupVectors, Gamma2Error> {
    let n = s.rows().max(s.cols());
    let padded = s.zero_pad(n, n);
    let (abs_t, w) = polar_absolute(&padded)?;
    let root = hermitian_eig(&abs_t)?.apply_spectral(|lambda| lambda.max(0.0).sqrt());
    let left = root.mul(&w.adjoint())?; // columns are x_i
    let collect = |m: &DenseMatrix, count: usize| -> Vec<Vec<(f64, f64)>> {
        (0..count)
            .map(|col| (0..n).map(|row| {
                let z = m.get(row, col);
                (z.re, z.im)
            }).collect())
            .collect()
    };
    let x_vectors = collect(&left, s.rows());
    let y_vectors = collect(&root, s.cols());
    let max_x = x_vectors.iter().map(|v| HaagerupVectors::vec_norm(v)).fold(0.0, f64::max);
    let max_y = y_vectors.iter().map(|v| HaagerupVectors::vec_norm(v)).fold(0.0, f64::max);
    Ok(HaagerupVectors { x_vectors, y_vectors, bound: max_x * max_y })
}

/// Monotone local ascent on the witness value `‖S∘B‖ / ‖B‖`.
///
/// With `(σ, u, v)` the top singular triple of `S∘B`, the linearization
/// `Re u*(S∘B')v = Re Σ M_ij b'_ij` with `M_ij = ū_i s_ij v_j` is maximized
/// over the unit ball `‖B'‖ ≤ 1` by the conjugated polar factor of `M`,
/// whose objective is the trace norm of `M` — at least the previous value.
/// So each step is non-decreasing and every intermediate value is a valid
/// lower bound.
fn ascend_witness(s: &DenseMatrix, start: &DenseMatrix, max_steps: usize) -> Option<Witness> {
    let norm0 = operator_norm(start);
    if norm0 == 0.0 {
        return None;
    }
    let mut b = start.scale(Complex64::new(1.0 / norm0, 0.0));
    let mut best = Witness { b: b.clone(), bound: operator_norm(&schur_product(s, &b).ok()?) };

    for _ in 0..max_steps {
        let product = schur_product(s, &b).ok()?;
        let triples = singular_triples(&product, 0.5).ok()?;
        let top = triples.first()?;
        let mut linearized = DenseMatrix::zeros(s.rows(), s.cols());
        for i in 0..s.rows() {
            for j in 0..s.cols() {
                let m = top.left[i].conj() * s.get(i, j) * top.right[j];
                linearized.set(i, j, m);
            }
        }
        // maximizer of Re tr(M Bᵀ) over ‖B‖ ≤ 1: B = conj(U) Vᵀ
        let m_triples = singular_triples(&linearized, 1e-12).ok()?;
        if m_triples.is_empty() {
            break;
        }
        let mut next = DenseMatrix::zeros(s.rows(), s.cols());
        for triple in &m_triples {
            for i in 0..s.rows() {
                for j in 0..s.cols() {
                    let add = triple.left[i].conj() * triple.right[j];
                    next.set(i, j, next.get(i, j) + add);
                }
            }
        }
        let denom = operator_norm(&next);
        if denom == 0.0 {
            break;
        }
        let prev = best.bound;
        b = next.scale(Complex64::new(1.0 / denom, 0.0));
        let bound = operator_norm(&schur_product(s, &b).ok()?);
        if bound > best.bound {
            best = Witness { b: b.clone(), bound };
        }
        if bound <= prev + 1e-12 * (1.0 + prev) {
            break;
        }
    }
    Some(best)
}

/// Witness from a dual certificate of the completion problem.
///
/// A separating functional has the form `−[[diag λ, −Z], [−Z*, diag μ]]`
/// with the block matrix PSD, so `K = diag(λ)^{-1/2} Z diag(μ)^{-1/2}` is
/// a contraction and its entrywise conjugate is a test matrix whose value
/// approaches the norm as the dual tightens. The returned bound is
/// recomputed honestly from `B`.
fn witness_from_gap(s: &DenseMatrix, gap: &DenseMatrix) -> Option<Witness> {
    let p = s.rows();
    let q = s.cols();
    if gap.rows() != p + q {
        return None;
    }
    let scale = gap.frobenius_norm();
    if scale == 0.0 {
        return None;
    }
    let floor = 1e-12 * scale;
    let lam: Vec<f64> = (0..p).map(|i| (-gap.get(i, i).re).max(floor)).collect();
    let mu: Vec<f64> = (0..q).map(|j| (-gap.get(p + j, p + j).re).max(floor)).collect();
    let mut b = DenseMatrix::zeros(p, q);
    for i in 0..p {
        for j in 0..q {
            let z = gap.get(i, p + j);
            b.set(i, j, (z / (lam[i] * mu[j]).sqrt()).conj());
        }
    }
    let norm_b = operator_norm(&b);
    if norm_b <= 0.0 {
        return None;
    }
    let bound = operator_norm(&schur_product(s, &b).ok()?) / norm_b;
    Some(Witness { b, bound })
}

// ---------------------------------------------------------------------
// public operations
// ---------------------------------------------------------------------

/// `‖Δ(|T*|)‖^{1/2} · ‖Δ(|T|)‖^{1/2}`, an upper bound for the multiplier
/// norm of a square matrix.
pub fn upper_bound_polar(t: &DenseMatrix) -> Result<f64, Gamma2Error> {
    if !t.is_square() {
        return Err(CoreError::NotSquare { rows: t.rows(), cols: t.cols() }.into());
    }
    let (abs_t, _) = polar_absolute(t)?;
    let (abs_t_star, _) = polar_absolute(&t.adjoint())?;
    let max_diag = |m: &DenseMatrix| -> f64 {
        (0..m.rows()).map(|i| m.get(i, i).re).fold(0.0, f64::max)
    };
    let dt = max_diag(&diag_expectation(&abs_t)?);
    let dts = max_diag(&diag_expectation(&abs_t_star)?);
    Ok((dt * dts).sqrt())
}

/// Lower bound `‖S∘B‖/‖B‖` from an explicit nonzero test matrix.
pub fn lower_bound_witness(s: &DenseMatrix, b: &DenseMatrix) -> Result<Witness, Gamma2Error> {
    s.check_same_shape(b).map_err(Gamma2Error::Core)?;
    let norm_b = operator_norm(b);
    if norm_b == 0.0 {
        return Err(Gamma2Error::ZeroTest);
    }
    let bound = operator_norm(&schur_product(s, b)?) / norm_b;
    Ok(Witness { b: b.clone(), bound })
}

fn feasibility_eps(s: &DenseMatrix) -> f64 {
    tol::DYKSTRA_FEAS_FACTOR * (1.0 + operator_norm(s))
}

/// Factorization vectors at level `t`, from the PSD completion found by
/// the projection scheme. Fails with `NotFeasible` when the completion
/// does not exist (within the solver's resolution).
///
/// At a level near the boundary the projections converge too slowly to
/// decide; the barrier optimum settles those, and its certificate is
/// accepted only if it self-validates at the requested level.
pub fn extract_haagerup(s: &DenseMatrix, t: f64) -> Result<HaagerupVectors, Gamma2Error> {
    if s.is_zero() && t >= 0.0 {
        let zero = vec![(0.0, 0.0); 1];
        return Ok(HaagerupVectors {
            x_vectors: vec![zero.clone(); s.rows()],
            y_vectors: vec![zero; s.cols()],
            bound: 0.0,
        });
    }
    // the projection probe decides clearly away from the critical level;
    // near it, fall through to the barrier optimum
    match probe_level(s, t, tol::DYKSTRA_CAP / 4, feasibility_eps(s))? {
        Probe::Feasible(y) => return factor_completion(&y, s.rows(), s.cols()),
        Probe::Stalled | Probe::Infeasible => {}
    }
    let slack = tol::HAAGERUP_REPRO_ABS * (1.0 + t);
    let sol = sdp::minimize_completion_level(s, slack.min(1e-7))?;
    if sol.level <= t + slack {
        let cert = factor_completion(&sol.completion, s.rows(), s.cols())?;
        if cert.check(s).is_ok() && cert.bound <= t + slack {
            return Ok(cert);
        }
    }
    Err(Gamma2Error::NotFeasible { level: t })
}

/// Built-in witness candidates: the normalized multiplier itself, the
/// conjugate partial isometry of its polar decomposition, and the
/// largest-entry indicator (exact for positive semidefinite input).
fn seed_witnesses(s: &DenseMatrix) -> Result<Vec<Witness>, Gamma2Error> {
    let mut out = Vec::new();
    let norm_s = operator_norm(s);
    if norm_s > 0.0 {
        let seed = s.scale(Complex64::new(1.0 / norm_s, 0.0));
        out.push(lower_bound_witness(s, &seed)?);
    }
    let n = s.rows().max(s.cols());
    let (_, w) = polar_absolute(&s.zero_pad(n, n))?;
    let mut cropped = DenseMatrix::zeros(s.rows(), s.cols());
    for i in 0..s.rows() {
        for j in 0..s.cols() {
            cropped.set(i, j, w.get(i, j).conj());
        }
    }
    if !cropped.is_zero() {
        out.push(lower_bound_witness(s, &cropped)?);
    }
    let (mut bi, mut bj, mut big) = (0, 0, 0.0);
    for i in 0..s.rows() {
        for j in 0..s.cols() {
            if s.get(i, j).norm() > big {
                big = s.get(i, j).norm();
                (bi, bj) = (i, j);
            }
        }
    }
    if big > 0.0 {
        let mut single = DenseMatrix::zeros(s.rows(), s.cols());
        single.set(bi, bj, Complex64::ONE);
        out.push(lower_bound_witness(s, &single)?);
    }
    Ok(out)
}

/// Multiplier norm of an explicit matrix to within `tol`, with bracketing
/// certificates.
pub fn schur_norm(s: &DenseMatrix, tol_req: f64) -> Result<NormReport, Gamma2Error> {
    if !(tol_req.is_finite() && tol_req >= tol::SCHUR_NORM_MIN_TOL) {
        return Err(Gamma2Error::BadTolerance(tol_req));
    }
    const DIM_LIMIT: usize = 128;
    let dim = s.rows().max(s.cols());
    if dim > DIM_LIMIT {
        return Err(Gamma2Error::TooLarge { dim, limit: DIM_LIMIT });
    }

    if s.is_zero() {
        // any nonzero B certifies the zero lower bound
        let mut b = DenseMatrix::zeros(s.rows(), s.cols());
        b.set(0, 0, Complex64::ONE);
        return Ok(NormReport {
            value: 0.0,
            tol: tol_req,
            upper_cert: extract_haagerup(s, 0.0)?,
            lower_cert: Witness { b, bound: 0.0 },
        });
    }

    // certified bracket first: a monotone-ascent witness from below, the
    // polar factorization from above; group-invariant and PSD inputs
    // collapse it immediately
    let mut lower: Witness = seed_witnesses(s)?
        .into_iter()
        .filter_map(|w| ascend_witness(s, &w.b, 200))
        .max_by(|a, b| a.bound.partial_cmp(&b.bound).unwrap())
        .expect("nonzero matrix always yields a seed witness");
    let mut upper: HaagerupVectors = [polar_vectors(s)?, row_vectors(s, false), row_vectors(s, true)]
        .into_iter()
        .min_by(|a, b| a.bound.partial_cmp(&b.bound).unwrap())
        .expect("three candidates");

    // barrier solver closes the bracket when the certificates alone leave
    // it open (alternating projections cannot resolve levels this close
    // to the norm within any practical iteration budget)
    if upper.bound - lower.bound > tol_req {
        let sol = sdp::minimize_completion_level(s, (0.25 * tol_req).min(1e-7))?;
        let cert = factor_completion(&sol.completion, s.rows(), s.cols())?;
        if cert.bound < upper.bound && cert.check(s).is_ok() {
            upper = cert;
        }
        // the scaled inverse at the central point is a dual certificate;
        // its induced test matrix seeds one more ascent
        if let Some(raw) = witness_from_gap(s, &sol.dual.scale(Complex64::new(-1.0, 0.0))) {
            if let Some(w) = ascend_witness(s, &raw.b, 400) {
                if w.bound > lower.bound {
                    lower = w;
                }
            }
        }
    }

    let value = 0.5 * (lower.bound + upper.bound);
    let report = NormReport { value, tol: tol_req, upper_cert: upper, lower_cert: lower };
    if report.upper_cert.bound - report.value > tol_req + 1e-12
        || report.value - report.lower_cert.bound > tol_req + 1e-12
    {
        return Err(Gamma2Error::NoConvergence {
            lower: report.lower_cert.bound,
            upper: report.upper_cert.bound,
        });
    }
    Ok(report)
}

/// Derived quantities of the large-norm construction for a nonnegative
/// square matrix: the mean squared mass `α`, the guaranteed multiplier
/// lower bound `(1/2)√(α/3)`, and the witness value `⟨u, Zv⟩` which is at
/// least `√(α/2)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BignormBounds {
    pub alpha: f64,
    pub guaranteed_lower: f64,
    pub z_witness: f64,
}

pub fn bignorm_bounds(a: &NonnegMatrix) -> Result<BignormBounds, Gamma2Error> {
    if a.rows() != a.cols() {
        return Err(CoreError::NotSquare { rows: a.rows(), cols: a.cols() }.into());
    }
    let m = a.rows();
    let mut row_sq = vec![0.0; m];
    let mut col_sq = vec![0.0; m];
    let mut total = 0.0;
    for i in 0..m {
        for j in 0..m {
            let sq = a.value(i, j) * a.value(i, j);
            row_sq[i] += sq;
            col_sq[j] += sq;
            total += sq;
        }
    }
    if total == 0.0 {
        return Err(Gamma2Error::EmptyMatrix);
    }
    let alpha = total / m as f64;

    // z = Σ a_ij² √(r_i c_j / (r_i + c_j)) / (mα); zero rows and columns
    // never contribute because a_ij = 0 forces the term to zero
    let mut z = 0.0;
    for i in 0..m {
        for j in 0..m {
            let sq = a.value(i, j) * a.value(i, j);
            if sq > 0.0 {
                z += sq * (row_sq[i] * col_sq[j] / (row_sq[i] + col_sq[j])).sqrt();
            }
        }
    }
    z /= total;

    Ok(BignormBounds { alpha, guaranteed_lower: 0.5 * (alpha / 3.0).sqrt(), z_witness: z })
}
