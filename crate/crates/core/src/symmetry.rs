//! Exact Schur norms for matrices commuting with a transitive group
//! action.
//!
//! For a transitive action, the commutant is spanned by the orbit
//! indicator matrices of the action on pairs, every element is constant
//! on the diagonal, and the multiplier norm collapses to the normalized
//! trace of the absolute value: `‖T‖_m = Tr(|T|)/n`. The cyclic and
//! sign-pattern circulants admit closed cotangent forms on top of that.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::eig::polar_absolute;
use crate::error::CoreError;
use crate::matrix::{diag_expectation, DenseMatrix};
use crate::tol;

#[derive(Debug, Error)]
pub enum SymmetryError {
    #[error("generator {index} is not a permutation of 0..{points}")]
    BadGenerator { index: usize, points: usize },

    #[error("the action is not transitive: point 0 reaches only {reached} of {points} points")]
    NotTransitive { reached: usize, points: usize },

    #[error("expected {expected} orbit coefficients, got {got}")]
    BadCoefficients { expected: usize, got: usize },

    #[error(
        "diagonal of |T| (or |T*|) is not scalar: spread {spread:.3e} exceeds {limit:.3e}; \
         the trace formula does not apply"
    )]
    DiagonalNotScalar { spread: f64, limit: f64 },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error(transparent)]
    Core(#[from] CoreError),
}

/// A finite group acting transitively on `{0, ..., n_points−1}`,
/// presented by generating permutations.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "GroupActionJson", into = "GroupActionJson")]
pub struct GroupAction {
    n_points: usize,
    generators: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GroupActionJson {
    points: usize,
    generators: Vec<Vec<usize>>,
}

impl TryFrom<GroupActionJson> for GroupAction {
    type Error = SymmetryError;

    fn try_from(raw: GroupActionJson) -> Result<Self, SymmetryError> {
        GroupAction::new(raw.points, raw.generators)
    }
}

impl From<GroupAction> for GroupActionJson {
    fn from(g: GroupAction) -> GroupActionJson {
        GroupActionJson { points: g.n_points, generators: g.generators }
    }
}

impl GroupAction {
    /// Validates that every generator is a bijection and that the
    /// generated group moves point 0 onto every point.
    pub fn new(n_points: usize, generators: Vec<Vec<usize>>) -> Result<Self, SymmetryError> {
        for (index, gen) in generators.iter().enumerate() {
            let mut seen = vec![false; n_points];
            if gen.len() != n_points {
                return Err(SymmetryError::BadGenerator { index, points: n_points });
            }
            for &image in gen {
                if image >= n_points || seen[image] {
                    return Err(SymmetryError::BadGenerator { index, points: n_points });
                }
                seen[image] = true;
            }
        }
        let action = GroupAction { n_points, generators };
        let reached = action.orbit_of_zero();
        if reached != n_points {
            return Err(SymmetryError::NotTransitive { reached, points: n_points });
        }
        Ok(action)
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    fn orbit_of_zero(&self) -> usize {
        if self.n_points == 0 {
            return 0;
        }
        let mut seen = vec![false; self.n_points];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for gen in &self.generators {
                let y = gen[x];
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count
    }

    /// Natural action of the full symmetric group: a transposition and an
    /// n-cycle generate it.
    pub fn symmetric(n: usize) -> Self {
        assert!(n >= 1);
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let mut swap: Vec<usize> = (0..n).collect();
        if n >= 2 {
            swap.swap(0, 1);
        }
        GroupAction::new(n, vec![cycle, swap]).expect("transitive by construction")
    }

    /// Cyclic rotation action.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        GroupAction::new(n, vec![cycle]).expect("transitive by construction")
    }
}

/// Orbits of the action on ordered pairs, in discovery order: scanning
/// pairs row-major, each new orbit is closed under the generators. The
/// diagonal is the orbit of (0,0), hence always index 0.
#[derive(Clone, Debug)]
pub struct OrbitStructure {
    pub n_points: usize,
    pub n_orbits: usize,
    /// Map from pair (i, j) to its orbit index, row-major.
    pub orbit_index: Vec<usize>,
    /// 0/1 indicator matrices, one per orbit.
    pub basis: Vec<DenseMatrix>,
    /// Entries of each orbit in any fixed row (constant by transitivity).
    pub row_sums: Vec<usize>,
    /// Index of the diagonal orbit.
    pub diagonal_orbit: usize,
}

/// Decomposes the pair space into orbits by breadth-first closure under
/// the generators acting coordinatewise.
pub fn orbit_structure(action: &GroupAction) -> OrbitStructure {
    let n = action.n_points();
    let mut orbit_index = vec![usize::MAX; n * n];
    let mut n_orbits = 0;
    for start in 0..(n * n) {
        if orbit_index[start] != usize::MAX {
            continue;
        }
        let id = n_orbits;
        n_orbits += 1;
        let mut stack = vec![start];
        orbit_index[start] = id;
        while let Some(pair) = stack.pop() {
            let (i, j) = (pair / n, pair % n);
            for gen in action.generators() {
                let next = gen[i] * n + gen[j];
                if orbit_index[next] == usize::MAX {
                    orbit_index[next] = id;
                    stack.push(next);
                }
            }
        }
    }

    let mut basis = vec![DenseMatrix::zeros(n, n); n_orbits];
    for pair in 0..(n * n) {
        let (i, j) = (pair / n, pair % n);
        basis[orbit_index[pair]].set(i, j, Complex64::ONE);
    }
    let row_sums = basis
        .iter()
        .map(|t| (0..n).filter(|&j| t.get(0, j).re == 1.0).count())
        .collect();

    OrbitStructure {
        n_points: n,
        n_orbits,
        orbit_index,
        basis,
        row_sums,
        diagonal_orbit: 0,
    }
}

/// `Tr(|T|)/n` for a square matrix whose `|T|` and `|T*|` have scalar
/// diagonal — the exact multiplier norm under that hypothesis.
///
/// Fails with `DiagonalNotScalar` when the hypothesis does not hold, in
/// which case the numeric solver is the fallback.
pub fn mathias_norm(t: &DenseMatrix) -> Result<f64, SymmetryError> {
    if !t.is_square() {
        return Err(SymmetryError::NotSquare { rows: t.rows(), cols: t.cols() });
    }
    let n = t.rows();
    let (abs_t, _) = polar_absolute(t)?;
    let (abs_t_star, _) = polar_absolute(&t.adjoint())?;
    let scale = abs_t.get(0, 0).re.max(1e-300);
    for m in [&abs_t, &abs_t_star] {
        let diag = diag_expectation(m)?;
        let spread = (0..n)
            .map(|i| (diag.get(i, i).re - m.trace().re / n as f64).abs())
            .fold(0.0, f64::max);
        if spread > tol::SCALAR_DIAG_REL * scale.max(m.trace().re / n as f64) {
            return Err(SymmetryError::DiagonalNotScalar {
                spread,
                limit: tol::SCALAR_DIAG_REL * scale,
            });
        }
    }
    Ok(abs_t.trace().re / n as f64)
}

/// Exact multiplier norm of a commutant element `T = Σ coeffs_k T_k`
/// given by its orbit coefficients.
pub fn commutant_norm(
    action: &GroupAction,
    coeffs: &[Complex64],
) -> Result<f64, SymmetryError> {
    let orbits = orbit_structure(action);
    if coeffs.len() != orbits.n_orbits {
        return Err(SymmetryError::BadCoefficients {
            expected: orbits.n_orbits,
            got: coeffs.len(),
        });
    }
    let mut t = DenseMatrix::zeros(orbits.n_points, orbits.n_points);
    for (c, basis) in coeffs.iter().zip(&orbits.basis) {
        t = t.add(&basis.scale(*c))?;
    }
    mathias_norm(&t)
}

/// Closed form for `‖U + I‖_m` on the n-cycle:
/// `2cos(π/2n)/(n sin(π/2n))` for even n, `2/(n sin(π/2n))` for odd n.
/// Both tend to `4/π`.
pub fn cyclic_example_norm(n: u64) -> f64 {
    assert!(n >= 3, "cycle length must be at least 3");
    let x = std::f64::consts::PI / (2.0 * n as f64);
    if n % 2 == 0 {
        2.0 * x.cos() / (n as f64 * x.sin())
    } else {
        2.0 / (n as f64 * x.sin())
    }
}

/// Closed form for the multiplier norm of the n×n matrix with entries
/// `sgn(i−j)` (a finite Hilbert transform):
/// `(2/n) Σ_{j=1}^{⌊n/2⌋} cot((2j−1)π/2n)`.
pub fn sign_matrix_norm(n: u64) -> f64 {
    assert!(n >= 1);
    let mut sum = 0.0;
    for j in 1..=(n / 2) {
        let angle = (2 * j - 1) as f64 * std::f64::consts::PI / (2.0 * n as f64);
        sum += angle.cos() / angle.sin();
    }
    2.0 * sum / n as f64
}

/// The n×n matrix with entries `sgn(i − j)`.
pub fn sign_matrix(n: usize) -> DenseMatrix {
    let mut m = DenseMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let v = match i.cmp(&j) {
                std::cmp::Ordering::Greater => 1.0,
                std::cmp::Ordering::Less => -1.0,
                std::cmp::Ordering::Equal => 0.0,
            };
            m.set(i, j, Complex64::new(v, 0.0));
        }
    }
    m
}
