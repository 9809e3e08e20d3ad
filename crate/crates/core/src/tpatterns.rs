//! Hankel and Toeplitz patterns: lacunary decomposition, boundedness
//! classification through the flow module, ℓ²-based norm intervals and
//! the random flat-sign search.
//!
//! A Hankel pattern `ℋ(S)` collects the positions with `i+j ∈ S`; its
//! boundedness is governed by the dyadic counts `a_k = |S ∩ (2^{k−1}, 2^k]|`
//! (finite sup ⟺ finite union of lacunary sets ⟺ Schur bounded). Toeplitz
//! patterns (`i−j ∈ S`) are never Schur bounded for infinite S, with
//! two-sided `√|S|` estimates at any finite truncation.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::flow::{optimal_bound, schur_bound_interval, PatternSplit};
use crate::pattern::Pattern;

#[derive(Debug, Error)]
pub enum TPatternError {
    #[error("the set must be nonempty")]
    EmptySet,

    #[error("value {0} is not allowed here: Hankel sets are positive integers")]
    NonPositive(i64),

    #[error("grid {grid} is too small: need at least {need}")]
    GridTooSmall { grid: usize, need: usize },

    #[error("duplicate index {0} in the coefficient sequence")]
    DuplicateIndex(i64),

    #[error("coefficients must be finite")]
    NonFinite,

    #[error("need at least one trial")]
    NoTrials,
}

/// A finite set of diagonal indices: `i+j` values for Hankel patterns
/// (positive), `i−j` values for Toeplitz patterns (any sign).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DiagonalSetJson", into = "DiagonalSetJson")]
pub struct DiagonalSet {
    values: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct DiagonalSetJson {
    values: Vec<i64>,
}

impl TryFrom<DiagonalSetJson> for DiagonalSet {
    type Error = TPatternError;

    fn try_from(raw: DiagonalSetJson) -> Result<Self, TPatternError> {
        Ok(DiagonalSet::new(raw.values))
    }
}

impl From<DiagonalSet> for DiagonalSetJson {
    fn from(s: DiagonalSet) -> DiagonalSetJson {
        DiagonalSetJson { values: s.values }
    }
}

impl DiagonalSet {
    /// Sorts and deduplicates.
    pub fn new<I: IntoIterator<Item = i64>>(values: I) -> Self {
        let mut values: Vec<i64> = values.into_iter().collect();
        values.sort_unstable();
        values.dedup();
        DiagonalSet { values }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max_abs(&self) -> i64 {
        self.values.iter().map(|v| v.abs()).max().unwrap_or(0)
    }

    fn require_positive(&self) -> Result<(), TPatternError> {
        if let Some(&v) = self.values.iter().find(|&&v| v < 1) {
            return Err(TPatternError::NonPositive(v));
        }
        Ok(())
    }
}

/// Which diagonal family a pattern follows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagonalKind {
    /// Positions with `i + j` in the set.
    Hankel,
    /// Positions with `i − j` in the set.
    Toeplitz,
}

/// Finite truncation of `ℋ(S)` or `𝒯(S)` to a grid×grid corner, 0-based.
pub fn pattern_builders(s: &DiagonalSet, grid: usize, kind: DiagonalKind) -> Pattern {
    assert!(grid >= 1);
    let entries = (0..grid).flat_map(|i| {
        let s = &s;
        (0..grid).filter_map(move |j| {
            let key = match kind {
                DiagonalKind::Hankel => (i + j) as i64,
                DiagonalKind::Toeplitz => i as i64 - j as i64,
            };
            s.values.binary_search(&key).is_ok().then_some((i, j))
        })
    });
    Pattern::new(grid, grid, entries).expect("entries are in range by construction")
}

/// Dyadic interval index of `x ≥ 1`: the `k ≥ 0` with `x ∈ (2^{k−1}, 2^k]`.
fn dyadic_index(x: i64) -> u32 {
    debug_assert!(x >= 1);
    64 - ((x - 1) as u64).leading_zeros()
}

/// Dyadic census and lacunary split of a positive set.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LacunaryReport {
    /// `a_k = |S ∩ (2^{k−1}, 2^k]|`, keyed by `k` (zero counts omitted).
    pub dyadic_counts: std::collections::BTreeMap<u32, usize>,
    /// `L = max_k a_k` — the boundedness criterion over growing families.
    pub max_count: usize,
    /// At most `2L` pieces, each lacunary with ratio > 2.
    pub pieces: Vec<Vec<i64>>,
}

/// Splits a positive set into at most `2·max_count` lacunary pieces of
/// ratio > 2, by round-robin assignment within each dyadic interval and
/// parity of the interval index. The empty set yields an empty report.
pub fn lacunary_decompose(s: &DiagonalSet) -> Result<LacunaryReport, TPatternError> {
    s.require_positive()?;

    let mut counts = std::collections::BTreeMap::new();
    for &v in s.values() {
        *counts.entry(dyadic_index(v)).or_insert(0usize) += 1;
    }
    let max_count = counts.values().copied().max().unwrap_or(0);

    // class t + L·(k mod 2) receives the t-th element of interval k: one
    // element per class per interval, intervals two apart, so consecutive
    // members jump over a full dyadic interval and the ratio exceeds 2
    let mut pieces: Vec<Vec<i64>> = vec![Vec::new(); 2 * max_count];
    let mut slot_in_interval = 0usize;
    let mut current_interval = u32::MAX;
    for &v in s.values() {
        let k = dyadic_index(v);
        if k != current_interval {
            current_interval = k;
            slot_in_interval = 0;
        }
        pieces[slot_in_interval + max_count * (k as usize % 2)].push(v);
        slot_in_interval += 1;
    }
    pieces.retain(|p| !p.is_empty());

    Ok(LacunaryReport { dyadic_counts: counts, max_count, pieces })
}

/// The proof's rectangle witness: the first `2^k` rows and columns meet
/// `ℋ(S)` in at least `2^{k−1}·a_k` positions, so the optimal bound is at
/// least `a_k/4`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DyadicWitness {
    /// Dyadic interval index realizing the best bound.
    pub k: u32,
    /// Number of set elements in that interval.
    pub a_k: usize,
    /// Side length `2^k` of the witnessing square.
    pub side: usize,
    /// Entries of the truncated pattern inside the square.
    pub entries: usize,
    /// `entries / (2·side)` — a lower bound for the rectangle supremum.
    pub ratio: f64,
}

/// Classification of a finite Hankel pattern truncation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HankelReport {
    /// Whether the family `{ℋ(S)}` over growing grids stays Schur
    /// bounded; every finite set qualifies, with `max_count` as the
    /// growth diagnostic.
    pub bounded: bool,
    /// Optimal row/column bound of the truncated pattern.
    pub optimal_m: usize,
    /// Two-sided Schur bound estimate from the flow theorem.
    pub interval: (f64, f64),
    pub split: PatternSplit,
    pub lacunary: LacunaryReport,
    pub witness: Option<DyadicWitness>,
}

/// Builds `ℋ(S)` on a grid, runs the flow decomposition, and reports the
/// dyadic rectangle witness explaining the lower bound. The empty set is
/// trivially bounded with interval (0, 0).
pub fn hankel_classify(s: &DiagonalSet, grid: usize) -> Result<HankelReport, TPatternError> {
    s.require_positive()?;
    let need = 2 * s.max_abs() as usize;
    if grid < need.max(1) {
        return Err(TPatternError::GridTooSmall { grid, need: need.max(1) });
    }

    let pattern = pattern_builders(s, grid, DiagonalKind::Hankel);
    let (optimal_m, split) = optimal_bound(&pattern);
    let interval = schur_bound_interval(&pattern);
    let lacunary = lacunary_decompose(s)?;

    let witness = lacunary
        .dyadic_counts
        .iter()
        .filter(|&(&k, _)| (1usize << k) <= grid)
        .map(|(&k, &a_k)| {
            let side = 1usize << k;
            let entries = pattern
                .iter()
                .filter(|&(i, j)| i < side && j < side)
                .count();
            DyadicWitness { k, a_k, side, entries, ratio: entries as f64 / (2 * side) as f64 }
        })
        .max_by(|a, b| a.ratio.partial_cmp(&b.ratio).unwrap());

    Ok(HankelReport { bounded: true, optimal_m, interval, split, lacunary, witness })
}

/// Toeplitz truncation estimate `(max(1, √|S|/4), √|S|)`; `(0, 0)` for
/// the empty set.
pub fn toeplitz_bound_interval(s: &DiagonalSet) -> (f64, f64) {
    if s.is_empty() {
        return (0.0, 0.0);
    }
    let root = (s.len() as f64).sqrt();
    ((root / 4.0).max(1.0), root)
}

/// ℓ² estimate `(‖a‖₂/√2, ‖a‖₂)` for a Toeplitz multiplier with
/// coefficients `a_k` on diagonals `k`.
pub fn toeplitz_l2_interval(coeffs: &[(i64, Complex64)]) -> Result<(f64, f64), TPatternError> {
    let mut seen = std::collections::BTreeSet::new();
    let mut sq = 0.0;
    for &(k, c) in coeffs {
        if !seen.insert(k) {
            return Err(TPatternError::DuplicateIndex(k));
        }
        if !c.re.is_finite() || !c.im.is_finite() {
            return Err(TPatternError::NonFinite);
        }
        sq += c.norm_sqr();
    }
    let norm = sq.sqrt();
    Ok((norm / std::f64::consts::SQRT_2, norm))
}

/// Result of the randomized flat-sign search.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FlatSignResult {
    /// One sign per set element, in sorted element order.
    pub signs: Vec<i8>,
    /// Best sampled sup of `|Σ ε_k e^{i s_k θ}|` over the trials.
    pub sup_norm: f64,
    pub seed: u64,
}

/// Sampled sup norm of `f(θ) = Σ ε_k e^{i s_k θ}` on a uniform grid,
/// refined ×4 around the best point once.
fn sampled_sup(values: &[i64], signs: &[i8], grid_points: usize) -> f64 {
    let evaluate = |theta: f64| -> f64 {
        let mut acc = Complex64::ZERO;
        for (&s, &sign) in values.iter().zip(signs) {
            let phase = Complex64::new(0.0, s as f64 * theta).exp();
            acc += phase * sign as f64;
        }
        acc.norm()
    };
    let step = 2.0 * std::f64::consts::PI / grid_points as f64;
    let mut best = 0.0f64;
    let mut best_theta = 0.0;
    for g in 0..grid_points {
        let theta = g as f64 * step;
        let v = evaluate(theta);
        if v > best {
            best = v;
            best_theta = theta;
        }
    }
    for r in -4i32..=4 {
        let theta = best_theta + r as f64 * step / 4.0;
        best = best.max(evaluate(theta));
    }
    best
}

/// Draws `trials` uniform sign patterns (ChaCha stream, reproducible from
/// the seed) and keeps the one minimizing the sampled sup norm.
///
/// The sampling grid is at least `16·|S|` points and is always raised to
/// `2·max|s_k| + 1` so the grid mean of `|f|²` equals `|S|` exactly; the
/// reported sup therefore never falls below the Parseval floor `√|S|`.
pub fn flat_sign_search(
    s: &DiagonalSet,
    trials: usize,
    grid_points: usize,
    rng_seed: u64,
) -> Result<FlatSignResult, TPatternError> {
    if s.is_empty() {
        return Err(TPatternError::EmptySet);
    }
    if trials == 0 {
        return Err(TPatternError::NoTrials);
    }
    let min_grid = 16 * s.len();
    if grid_points < min_grid {
        return Err(TPatternError::GridTooSmall { grid: grid_points, need: min_grid });
    }
    let alias_free = 2 * s.max_abs() as usize + 1;
    let grid = grid_points.max(alias_free);

    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut best_signs = vec![1i8; s.len()];
    let mut best_sup = f64::INFINITY;
    let mut signs = vec![1i8; s.len()];
    for _ in 0..trials {
        for slot in signs.iter_mut() {
            *slot = if rng.gen::<bool>() { 1 } else { -1 };
        }
        let sup = sampled_sup(s.values(), &signs, grid);
        if sup < best_sup {
            best_sup = sup;
            best_signs.copy_from_slice(&signs);
        }
    }
    Ok(FlatSignResult { signs: best_signs, sup_norm: best_sup, seed: rng_seed })
}
