//! Command-line front end: every operation of the toolkit behind one
//! binary with JSON input/output, for scripting and for the acceptance
//! suite.
//!
//! Exit codes: 0 on success, 2 on invalid input, 3 when the norm solver
//! cannot certify a result. All numeric output is printed with 12
//! significant digits; exact rationals appear as decimal strings.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde_json::{json, Value};

use schur_core::flow::{self, Decompose};
use schur_core::gamma2::{self, Gamma2Error};
use schur_core::graphs::{self, JohnsonSpec, RationalJson};
use schur_core::symmetry::{self, GroupAction};
use schur_core::tpatterns::{self, DiagonalSet};
use schur_core::{hermitian_eig, DenseMatrix, NonnegMatrix, Pattern};

/// Schur multiplier toolkit: pattern decompositions, certified norms and
/// exact symmetric formulas.
#[derive(Parser)]
#[command(name = "schur", version, about, long_about = None, after_help = SCHEMA_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

const SCHEMA_HELP: &str = "\
JSON schemas (all indices 0-based; readers reject NaN/Inf and out-of-range \
indices):
  matrix    {\"rows\":R,\"cols\":C,\"data\":[[re,im],...]}   row-major
  pattern   {\"rows\":R,\"cols\":C,\"entries\":[[i,j],...]}
  action    {\"points\":N,\"generators\":[[perm],...]}
  coeffs    [[re,im],...]   ordered by orbit discovery order (diagonal first)
  rational  {\"num\":\"...\",\"den\":\"...\"}  decimal strings
  cut       {\"R\":[...],\"C\":[...],\"mass\":x,\"slack\":y}";

#[derive(Subcommand)]
enum Command {
    /// Multiplier norm of a matrix, with upper and lower certificates.
    Norm(NormArgs),
    /// Split a pattern or nonnegative matrix into row/column-bounded
    /// parts, or produce a cut certificate.
    Decompose(DecomposeArgs),
    /// Two-sided Schur bound estimate for a pattern or matrix.
    BoundInterval(BoundIntervalArgs),
    /// Exact norm of a commutant element given by orbit coefficients.
    Symmetric(SymmetricArgs),
    /// Kneser graph K(2n+1, n): exact norm and eigen data.
    Kneser(KneserArgs),
    /// Johnson graph J(v, n, i): adjacency matrix and spectrum.
    Johnson(JohnsonArgs),
    /// Classify a Hankel pattern on a finite grid.
    Hankel(HankelArgs),
    /// Toeplitz pattern estimates for a diagonal set.
    Toeplitz(ToeplitzArgs),
    /// Search for sign patterns flattening the associated exponential sum.
    FlatSigns(FlatSignsArgs),
    /// Verify the Johnson-scheme identities in exact arithmetic.
    VerifyScheme(VerifySchemeArgs),
}

#[derive(Args)]
struct NormArgs {
    /// Path to a matrix JSON file.
    #[arg(long)]
    matrix: PathBuf,
    /// Certificate tolerance (at least 1e-8).
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
}

#[derive(Args)]
struct DecomposeArgs {
    /// Path to a pattern JSON file.
    #[arg(long, conflicts_with = "matrix")]
    pattern: Option<PathBuf>,
    /// Path to a nonnegative matrix JSON file.
    #[arg(long)]
    matrix: Option<PathBuf>,
    /// Row bound: entries per row for patterns, squared ℓ² mass for
    /// matrices.
    #[arg(long, requires = "col_bound")]
    row_bound: Option<f64>,
    /// Column bound (same units as --row-bound).
    #[arg(long, requires = "row_bound")]
    col_bound: Option<f64>,
    /// Find the smallest symmetric bound instead (patterns only).
    #[arg(long, conflicts_with_all = ["row_bound", "col_bound"])]
    optimal: bool,
}

#[derive(Args)]
struct BoundIntervalArgs {
    #[arg(long, conflicts_with = "matrix")]
    pattern: Option<PathBuf>,
    #[arg(long)]
    matrix: Option<PathBuf>,
}

#[derive(Args)]
struct SymmetricArgs {
    /// Path to a group action JSON file.
    #[arg(long)]
    action: PathBuf,
    /// Path to orbit coefficients JSON ([[re,im],...]).
    #[arg(long)]
    coeffs: PathBuf,
}

#[derive(Args)]
struct KneserArgs {
    /// The parameter n of K(2n+1, n).
    #[arg(long)]
    n: u32,
    /// Report the norm as an exact rational.
    #[arg(long)]
    exact: bool,
}

#[derive(Args)]
struct JohnsonArgs {
    #[arg(long)]
    v: u32,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    i: u32,
}

#[derive(Args)]
struct HankelArgs {
    /// Comma-separated positive integers (the i+j diagonals).
    #[arg(long)]
    set: String,
    /// Grid size for the truncation (at least twice the largest element).
    #[arg(long)]
    grid: usize,
}

#[derive(Args)]
struct ToeplitzArgs {
    /// Comma-separated integers (the i−j diagonals).
    #[arg(long)]
    set: String,
    /// Optional comma-separated real coefficients on those diagonals for
    /// the ℓ² estimate.
    #[arg(long)]
    l2: Option<String>,
}

#[derive(Args)]
struct FlatSignsArgs {
    /// Comma-separated integers.
    #[arg(long)]
    set: String,
    #[arg(long)]
    trials: usize,
    #[arg(long)]
    seed: u64,
    /// Sampling grid (defaults to 16 times the set size).
    #[arg(long)]
    grid_points: Option<usize>,
}

#[derive(Args)]
struct VerifySchemeArgs {
    #[arg(long)]
    v: u32,
    #[arg(long)]
    n: u32,
}

enum CliError {
    Invalid(String),
    NoConvergence(String),
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Invalid(_) => ExitCode::from(2),
            CliError::NoConvergence(_) => ExitCode::from(3),
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Invalid(m) | CliError::NoConvergence(m) => m,
        }
    }
}

fn invalid(e: impl std::fmt::Display) -> CliError {
    CliError::Invalid(e.to_string())
}

impl From<Gamma2Error> for CliError {
    fn from(e: Gamma2Error) -> CliError {
        match e {
            Gamma2Error::NoConvergence { .. } => CliError::NoConvergence(e.to_string()),
            Gamma2Error::Core(schur_core::CoreError::NoConvergence { .. }) => {
                CliError::NoConvergence(e.to_string())
            }
            other => CliError::Invalid(other.to_string()),
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| invalid(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn parse_int_list(text: &str) -> Result<Vec<i64>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<i64>().map_err(|e| invalid(format!("bad integer '{s}': {e}"))))
        .collect()
}

fn parse_float_list(text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            let x = s.parse::<f64>().map_err(|e| invalid(format!("bad number '{s}': {e}")))?;
            if x.is_finite() {
                Ok(x)
            } else {
                Err(invalid(format!("non-finite coefficient '{s}'")))
            }
        })
        .collect()
}

/// Rounds every float in a JSON document to 12 significant digits.
fn round_floats(value: &mut Value) {
    match value {
        Value::Number(n) => {
            if n.is_f64() {
                if let Some(x) = n.as_f64() {
                    let rounded = format!("{x:.11e}").parse::<f64>().unwrap_or(x);
                    if let Some(num) = serde_json::Number::from_f64(rounded) {
                        *value = Value::Number(num);
                    }
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Result<Value, CliError> {
    serde_json::to_value(v).map_err(invalid)
}

fn run(cli: Cli) -> Result<Value, CliError> {
    match cli.command {
        Command::Norm(args) => {
            let matrix: DenseMatrix = read_json(&args.matrix)?;
            let report = gamma2::schur_norm(&matrix, args.tol)?;
            to_value(&report)
        }
        Command::Decompose(args) => {
            let bounds = args.row_bound.zip(args.col_bound);
            match (&args.pattern, &args.matrix) {
                (Some(path), None) => {
                    let pattern: Pattern = read_json(path)?;
                    if args.optimal {
                        let (m, split) = flow::optimal_bound(&pattern);
                        Ok(json!({ "optimal_m": m, "decomposition": to_value(&split)? }))
                    } else {
                        let (m, n) = bounds
                            .ok_or_else(|| invalid("need --row-bound/--col-bound or --optimal"))?;
                        if m < 0.0 || n < 0.0 || m.fract() != 0.0 || n.fract() != 0.0 {
                            return Err(invalid("pattern bounds must be nonnegative integers"));
                        }
                        match flow::decompose_pattern(&pattern, m as usize, n as usize) {
                            Decompose::Split(split) => {
                                Ok(json!({ "decomposition": to_value(&split)? }))
                            }
                            Decompose::Cut(cut) => Ok(json!({ "cut": to_value(&cut)? })),
                        }
                    }
                }
                (None, Some(path)) => {
                    let matrix: NonnegMatrix = read_json(path)?;
                    if args.optimal {
                        return Err(invalid("--optimal applies to patterns only"));
                    }
                    let (m, n) =
                        bounds.ok_or_else(|| invalid("need --row-bound and --col-bound"))?;
                    match flow::decompose_matrix(&matrix, m, n).map_err(invalid)? {
                        Decompose::Split(split) => Ok(json!({ "decomposition": to_value(&split)? })),
                        Decompose::Cut(cut) => Ok(json!({ "cut": to_value(&cut)? })),
                    }
                }
                _ => Err(invalid("provide exactly one of --pattern or --matrix")),
            }
        }
        Command::BoundInterval(args) => match (&args.pattern, &args.matrix) {
            (Some(path), None) => {
                let pattern: Pattern = read_json(path)?;
                let (m, _) = flow::optimal_bound(&pattern);
                let (lower, upper) = flow::schur_bound_interval(&pattern);
                Ok(json!({ "kind": "pattern", "optimal_m": m, "lower": lower, "upper": upper }))
            }
            (None, Some(path)) => {
                let matrix: NonnegMatrix = read_json(path)?;
                let (lower, upper) = flow::matrix_bound_interval(&matrix);
                Ok(json!({ "kind": "matrix", "m": upper / 2.0, "lower": lower, "upper": upper }))
            }
            _ => Err(invalid("provide exactly one of --pattern or --matrix")),
        },
        Command::Symmetric(args) => {
            let action: GroupAction = read_json(&args.action)?;
            let pairs: Vec<(f64, f64)> = read_json(&args.coeffs)?;
            let coeffs: Vec<Complex64> =
                pairs.into_iter().map(|(re, im)| Complex64::new(re, im)).collect();
            let value = symmetry::commutant_norm(&action, &coeffs).map_err(invalid)?;
            Ok(json!({ "value": value }))
        }
        Command::Kneser(args) => {
            if args.n < 1 {
                return Err(invalid("need n ≥ 1"));
            }
            let rational = graphs::kneser_schur_norm(args.n);
            let eigenvalues = graphs::kneser_eigenvalues(args.n);
            let dims: Vec<String> = graphs::scheme_eigen_dims(2 * args.n + 1, args.n)
                .iter()
                .map(|d| d.to_string())
                .collect();
            let float = rational_to_f64(&rational);
            let norm =
                if args.exact { to_value(&RationalJson::from(&rational))? } else { json!(float) };
            Ok(json!({
                "n": args.n,
                "norm": norm,
                "value": float,
                "eigenvalues": eigenvalues,
                "dims": dims,
            }))
        }
        Command::Johnson(args) => {
            let spec = JohnsonSpec::new(args.v, args.n, args.i).map_err(invalid)?;
            let adjacency = graphs::johnson_adjacency(&spec).map_err(invalid)?;
            let eig = hermitian_eig(&adjacency).map_err(invalid)?;
            let degree = (0..adjacency.cols()).map(|j| adjacency.get(0, j).re).sum::<f64>();
            Ok(json!({
                "v": args.v,
                "n": args.n,
                "i": args.i,
                "vertices": adjacency.rows(),
                "degree": degree,
                "spectrum": eig.eigenvalues,
                "adjacency": to_value(&adjacency)?,
            }))
        }
        Command::Hankel(args) => {
            let set = DiagonalSet::new(parse_int_list(&args.set)?);
            let report = tpatterns::hankel_classify(&set, args.grid).map_err(invalid)?;
            to_value(&report)
        }
        Command::Toeplitz(args) => {
            let set = DiagonalSet::new(parse_int_list(&args.set)?);
            let (lower, upper) = tpatterns::toeplitz_bound_interval(&set);
            let mut out = json!({
                "size": set.len(),
                "lower": lower,
                "upper": upper,
            });
            if let Some(text) = &args.l2 {
                let coeffs = parse_float_list(text)?;
                if coeffs.len() != set.len() {
                    return Err(invalid(format!(
                        "got {} coefficients for {} diagonals",
                        coeffs.len(),
                        set.len()
                    )));
                }
                let pairs: Vec<(i64, Complex64)> = set
                    .values()
                    .iter()
                    .zip(&coeffs)
                    .map(|(&k, &c)| (k, Complex64::new(c, 0.0)))
                    .collect();
                let (l2_lower, l2_upper) =
                    tpatterns::toeplitz_l2_interval(&pairs).map_err(invalid)?;
                out["l2_lower"] = json!(l2_lower);
                out["l2_upper"] = json!(l2_upper);
            }
            Ok(out)
        }
        Command::FlatSigns(args) => {
            let set = DiagonalSet::new(parse_int_list(&args.set)?);
            let grid = args.grid_points.unwrap_or(16 * set.len().max(1));
            let result =
                tpatterns::flat_sign_search(&set, args.trials, grid, args.seed).map_err(invalid)?;
            to_value(&result)
        }
        Command::VerifyScheme(args) => {
            let report = graphs::verify_scheme(args.v, args.n).map_err(invalid)?;
            to_value(&report)
        }
    }
}

fn rational_to_f64(r: &num_rational::BigRational) -> f64 {
    let num = r.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
    let den = r.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
    num / den
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(mut value) => {
            round_floats(&mut value);
            println!("{value}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}
