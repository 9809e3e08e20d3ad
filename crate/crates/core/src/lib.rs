//! Schur multiplier toolkit.
//!
//! Decides whether sparsity patterns admit bounded Schur multipliers,
//! decomposes them into row/column-bounded parts by max-flow, computes
//! multiplier norms numerically with re-checkable upper and lower
//! certificates, and evaluates the exact closed forms available for
//! group-invariant matrices, circulants and Kneser graphs.

pub mod error;
pub mod matrix;
pub mod pattern;
pub mod tol;

pub mod eig;
pub mod flow;
mod sdp;
pub mod gamma2;
pub mod symmetry;
pub mod graphs;
pub mod tpatterns;

pub use error::CoreError;
pub use matrix::{diag_expectation, schur_product, DenseMatrix, NonnegMatrix};
pub use pattern::Pattern;

pub use eig::{hermitian_eig, operator_norm, polar_absolute, singular_triples, EigenDecomposition, SingularTriple};
