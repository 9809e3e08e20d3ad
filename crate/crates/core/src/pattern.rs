//! Sparsity patterns: finite sets of (row, col) positions inside a declared
//! grid. JSON form is `{"rows":R,"cols":C,"entries":[[i,j],...]}`, 0-based.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::CoreError;
use crate::matrix::DenseMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    n_rows: usize,
    n_cols: usize,
    entries: BTreeSet<(usize, usize)>,
}

impl Pattern {
    /// Empty pattern on a positive grid.
    pub fn empty(n_rows: usize, n_cols: usize) -> Self {
        assert!(n_rows > 0 && n_cols > 0, "grid dimensions must be positive");
        Pattern { n_rows, n_cols, entries: BTreeSet::new() }
    }

    pub fn new<I>(n_rows: usize, n_cols: usize, entries: I) -> Result<Self, CoreError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n_rows == 0 || n_cols == 0 {
            return Err(CoreError::BadShape("grid dimensions must be positive".into()));
        }
        let mut set = BTreeSet::new();
        for (i, j) in entries {
            if i >= n_rows || j >= n_cols {
                return Err(CoreError::BadShape(format!(
                    "entry ({i},{j}) outside {n_rows}x{n_cols} grid"
                )));
            }
            set.insert((i, j));
        }
        Ok(Pattern { n_rows, n_cols, entries: set })
    }

    /// Full grid.
    pub fn full(n_rows: usize, n_cols: usize) -> Self {
        let entries = (0..n_rows).flat_map(|i| (0..n_cols).map(move |j| (i, j)));
        Pattern::new(n_rows, n_cols, entries).unwrap()
    }

    #[inline]
    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    #[inline]
    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.entries.contains(&(i, j))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.entries.iter().copied()
    }

    /// Number of entries in each row.
    pub fn row_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n_rows];
        for &(i, _) in &self.entries {
            counts[i] += 1;
        }
        counts
    }

    pub fn col_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n_cols];
        for &(_, j) in &self.entries {
            counts[j] += 1;
        }
        counts
    }

    /// 0/1 indicator matrix on the grid.
    pub fn indicator(&self) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(self.n_rows, self.n_cols);
        for &(i, j) in &self.entries {
            m.set(i, j, num_complex::Complex64::ONE);
        }
        m
    }

    /// Union of two patterns on the same grid.
    pub fn union(&self, other: &Pattern) -> Result<Pattern, CoreError> {
        if self.n_rows != other.n_rows || self.n_cols != other.n_cols {
            return Err(CoreError::ShapeMismatch {
                left: (self.n_rows, self.n_cols),
                right: (other.n_rows, other.n_cols),
            });
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().copied());
        Ok(Pattern { n_rows: self.n_rows, n_cols: self.n_cols, entries })
    }

    pub fn is_disjoint(&self, other: &Pattern) -> bool {
        self.entries.is_disjoint(&other.entries)
    }
}

#[derive(Serialize, Deserialize)]
struct PatternJson {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize)>,
}

impl Serialize for Pattern {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PatternJson {
            rows: self.n_rows,
            cols: self.n_cols,
            entries: self.entries.iter().copied().collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Pattern {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = PatternJson::deserialize(deserializer)?;
        Pattern::new(raw.rows, raw.cols, raw.entries).map_err(serde::de::Error::custom)
    }
}
