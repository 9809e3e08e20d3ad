//! Central table of numeric tolerances and iteration budgets.
//!
//! Every module reads its thresholds from here so the test suite can pin
//! them in one place.

/// Relative Hermitian-symmetry tolerance: `‖T − T*‖_F ≤ HERMITIAN_REL · ‖T‖_F`.
pub const HERMITIAN_REL: f64 = 1e-12;

/// Relative reconstruction bound for an eigendecomposition,
/// `‖T − VΛV*‖_F ≤ EIG_RECON_REL · ‖T‖_F`.
pub const EIG_RECON_REL: f64 = 1e-10;

/// Absolute orthonormality bound for eigenvector matrices, `‖V*V − I‖_F`.
pub const EIG_ORTHO_ABS: f64 = 1e-10;

/// Sweep budget for the cyclic Jacobi eigensolver.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Relative off-diagonal mass at which a Jacobi sweep is declared converged.
pub const JACOBI_OFF_REL: f64 = 1e-15;

/// Relative reconstruction bound for the polar decomposition `T = W·|T|`.
pub const POLAR_RECON_REL: f64 = 1e-9;

/// Relative cutoff below which singular values are treated as zero when
/// forming the partial isometry of a polar decomposition.
pub const POLAR_RANK_REL: f64 = 1e-13;

/// Relative accuracy of `operator_norm`.
pub const OPNORM_REL: f64 = 1e-9;

/// Fixed-point scale used for real flow capacities (1e-9 resolution).
pub const FLOW_FIXED_SCALE: f64 = 1e9;

/// Minimum slack (in original units) for a cut certificate on matrix input.
pub const FLOW_SLACK_MIN: f64 = 1e-9;

/// Entrywise reconstruction tolerance for matrix decompositions.
pub const FLOW_RECON_ABS: f64 = 1e-9;

/// Bisection tolerance on the squared bound when locating the optimal
/// matrix decomposition parameter.
pub const MATRIX_BISECT_TOL: f64 = 1e-6;

/// Smallest tolerance `schur_norm` accepts.
pub const SCHUR_NORM_MIN_TOL: f64 = 1e-8;

/// Iteration cap for one Dykstra feasibility run.
pub const DYKSTRA_CAP: usize = 20_000;

/// Feasibility threshold factor: the projection gap must fall below
/// `DYKSTRA_FEAS_FACTOR · (1 + ‖S‖)`.
pub const DYKSTRA_FEAS_FACTOR: f64 = 1e-9;

/// Window length for the projection-gap plateau test that declares a
/// feasibility subproblem stalled on the infeasible side.
pub const DYKSTRA_PLATEAU_WINDOW: usize = 64;

/// Relative gap improvement below which the plateau test fires.
pub const DYKSTRA_PLATEAU_REL: f64 = 1e-7;

/// Absolute tolerance at which Haagerup vectors must reproduce the
/// multiplier entries.
pub const HAAGERUP_REPRO_ABS: f64 = 1e-6;

/// Relative tolerance of the scalar-diagonal hypothesis check in the
/// symmetry module.
pub const SCALAR_DIAG_REL: f64 = 1e-8;

/// Slack allowed when validating decomposition row/column bounds.
pub const BOUND_CHECK_ABS: f64 = 1e-9;
