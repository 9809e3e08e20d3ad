//! Dense complex matrices and the entrywise operations shared by every
//! other module.
//!
//! Matrices are small (≤ ~256×256), stored row-major in double precision.
//! The JSON form is `{"rows":R,"cols":C,"data":[[re,im],...]}`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::CoreError;

/// Dense complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl DenseMatrix {
    /// Zero matrix of the given shape. Dimensions must be positive.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        DenseMatrix { rows, cols, data: vec![Complex64::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Complex64::ONE);
        }
        m
    }

    /// All-ones matrix.
    pub fn ones(rows: usize, cols: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        m.data.fill(Complex64::ONE);
        m
    }

    pub fn from_data(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self, CoreError> {
        if rows == 0 || cols == 0 {
            return Err(CoreError::BadShape("matrix dimensions must be positive".into()));
        }
        if data.len() != rows * cols {
            return Err(CoreError::BadShape(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(CoreError::NonFinite);
        }
        Ok(DenseMatrix { rows, cols, data })
    }

    /// Build from real row slices; panics on ragged input.
    pub fn from_real_rows(rows: &[&[f64]]) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, Complex64::new(x, 0.0));
            }
        }
        m
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, &x) in values.iter().enumerate() {
            m.set(i, i, Complex64::new(x, 0.0));
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, z: Complex64) {
        self.data[i * self.cols + j] = z;
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|z| z.re == 0.0 && z.im == 0.0)
    }

    /// True when every entry has exactly zero imaginary part.
    pub fn is_real(&self) -> bool {
        self.data.iter().all(|z| z.im == 0.0)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        let mut out = self.clone();
        for z in &mut out.data {
            *z = z.conj();
        }
        out
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let mut out = self.clone();
        for z in &mut out.data {
            *z *= c;
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self, CoreError> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (z, w) in out.data.iter_mut().zip(&other.data) {
            *z += w;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CoreError> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (z, w) in out.data.iter_mut().zip(&other.data) {
            *z -= w;
        }
        Ok(out)
    }

    /// Matrix product.
    pub fn mul(&self, other: &Self) -> Result<Self, CoreError> {
        if self.cols != other.rows {
            return Err(CoreError::BadShape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Apply to a vector (length = cols).
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![Complex64::ZERO; self.rows];
        for i in 0..self.rows {
            let mut acc = Complex64::ZERO;
            for j in 0..self.cols {
                acc += self.get(i, j) * v[j];
            }
            out[i] = acc;
        }
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square());
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    pub fn check_same_shape(&self, other: &Self) -> Result<(), CoreError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(CoreError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(())
    }

    /// Hermitian part `(T + T*)/2`; requires a square matrix.
    pub fn hermitian_part(&self) -> Self {
        assert!(self.is_square());
        let adj = self.adjoint();
        let mut out = self.clone();
        for (z, w) in out.data.iter_mut().zip(&adj.data) {
            *z = (*z + w) * 0.5;
        }
        out
    }

    /// Embed into the top-left corner of a `rows`×`cols` zero matrix.
    pub fn zero_pad(&self, rows: usize, cols: usize) -> Self {
        assert!(rows >= self.rows && cols >= self.cols);
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
        }
        out
    }
}

/// Entrywise (Schur/Hadamard) product.
pub fn schur_product(a: &DenseMatrix, b: &DenseMatrix) -> Result<DenseMatrix, CoreError> {
    a.check_same_shape(b)?;
    let data = a
        .data
        .iter()
        .zip(&b.data)
        .map(|(x, y)| x * y)
        .collect::<Vec<_>>();
    Ok(DenseMatrix { rows: a.rows, cols: a.cols, data })
}

/// Expectation onto the main diagonal: keeps the diagonal, zeroes the rest.
pub fn diag_expectation(t: &DenseMatrix) -> Result<DenseMatrix, CoreError> {
    if !t.is_square() {
        return Err(CoreError::NotSquare { rows: t.rows, cols: t.cols });
    }
    let mut out = DenseMatrix::zeros(t.rows, t.cols);
    for i in 0..t.rows {
        out.set(i, i, t.get(i, i));
    }
    Ok(out)
}

/// Dense matrix with real nonnegative entries.
///
/// The wrapper guarantees exactly zero imaginary parts and entries ≥ 0, so
/// flow and lower-bound code can read plain `f64` values.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "DenseMatrix", into = "DenseMatrix")]
pub struct NonnegMatrix(DenseMatrix);

impl NonnegMatrix {
    pub fn new(m: DenseMatrix) -> Result<Self, CoreError> {
        if m.data.iter().any(|z| z.im != 0.0) {
            return Err(CoreError::NotReal);
        }
        if m.data.iter().any(|z| z.re < 0.0) {
            return Err(CoreError::NegativeEntry);
        }
        Ok(NonnegMatrix(m))
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self, CoreError> {
        Self::new(DenseMatrix::from_real_rows(rows))
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.0.rows()
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.0.cols()
    }

    #[inline]
    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.0.get(i, j).re
    }

    pub fn as_dense(&self) -> &DenseMatrix {
        &self.0
    }

    pub fn into_dense(self) -> DenseMatrix {
        self.0
    }
}

impl TryFrom<DenseMatrix> for NonnegMatrix {
    type Error = CoreError;

    fn try_from(m: DenseMatrix) -> Result<Self, CoreError> {
        NonnegMatrix::new(m)
    }
}

impl From<NonnegMatrix> for DenseMatrix {
    fn from(m: NonnegMatrix) -> DenseMatrix {
        m.0
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    data: Vec<(f64, f64)>,
}

impl Serialize for DenseMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| (z.re, z.im)).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DenseMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = MatrixJson::deserialize(deserializer)?;
        let data = raw.data.iter().map(|&(re, im)| Complex64::new(re, im)).collect();
        DenseMatrix::from_data(raw.rows, raw.cols, data).map_err(serde::de::Error::custom)
    }
}
