//! Error types for the base linear-algebra layer.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch { left: (usize, usize), right: (usize, usize) },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("bad shape: {0}")]
    BadShape(String),

    #[error("matrix entries must be finite")]
    NonFinite,

    #[error("matrix entries must be real")]
    NotReal,

    #[error("matrix entries must be nonnegative")]
    NegativeEntry,

    #[error("matrix is not Hermitian: ‖T − T*‖_F = {deviation:.3e} exceeds {limit:.3e}")]
    NotHermitian { deviation: f64, limit: f64 },

    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
}
