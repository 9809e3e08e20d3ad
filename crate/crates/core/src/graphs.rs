//! Johnson and Kneser graphs: adjacency matrices, the Johnson-scheme
//! eigenstructure, and the exact Kneser multiplier norm in rational
//! arithmetic.
//!
//! Vertices are the n-element subsets of `{0..v−1}` in colexicographic
//! order. The identities verified here are integer identities, so all
//! scheme checks run in exact arithmetic; floating point appears only at
//! comparison boundaries.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::DenseMatrix;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("invalid Johnson parameters v={v}, n={n}, i={i}: need 1 ≤ n ≤ v/2 and 0 ≤ i ≤ n")]
    BadSpec { v: u32, n: u32, i: u32 },

    #[error("C({v},{n}) = {count} vertices exceeds the limit {limit}")]
    TooLarge { v: u32, n: u32, count: u64, limit: u64 },
}

/// Parameters of the Johnson graph `J(v, n, i)`: vertices are n-subsets
/// of a v-set, edges join subsets with intersection size exactly `i`.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct JohnsonSpec {
    pub v: u32,
    pub n: u32,
    pub i: u32,
}

impl JohnsonSpec {
    pub fn new(v: u32, n: u32, i: u32) -> Result<Self, GraphError> {
        if n < 1 || 2 * n > v || i > n {
            return Err(GraphError::BadSpec { v, n, i });
        }
        Ok(JohnsonSpec { v, n, i })
    }

    /// Kneser graph `K(v, n) = J(v, n, 0)`.
    pub fn kneser(v: u32, n: u32) -> Result<Self, GraphError> {
        Self::new(v, n, 0)
    }

    pub fn vertex_count(&self) -> BigInt {
        binomial(self.v as u64, self.n as u64)
    }
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..k {
        num *= BigInt::from(n - t);
        den *= BigInt::from(t + 1);
    }
    num / den
}

/// All n-subsets of `{0..v−1}` in colexicographic order.
pub fn subsets_colex(v: u32, n: u32) -> Vec<Vec<u32>> {
    assert!(n >= 1 && n <= v);
    let mut current: Vec<u32> = (0..n).collect();
    let mut out = vec![current.clone()];
    loop {
        let mut advanced = false;
        for k in 0..n as usize {
            let limit = if k + 1 < n as usize { current[k + 1] } else { v };
            if current[k] + 1 < limit {
                current[k] += 1;
                for t in 0..k {
                    current[t] = t as u32;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            break;
        }
        out.push(current.clone());
    }
    out
}

fn intersection_size(a: &[u32], b: &[u32]) -> u32 {
    let (mut x, mut y, mut count) = (0, 0, 0);
    while x < a.len() && y < b.len() {
        match a[x].cmp(&b[y]) {
            std::cmp::Ordering::Less => x += 1,
            std::cmp::Ordering::Greater => y += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                x += 1;
                y += 1;
            }
        }
    }
    count
}

/// 0/1 integer orbit matrices `T_k` of the Johnson scheme: `(T_k)_{AB} = 1`
/// iff `|A ∩ B| = k`, for `k = 0..n`.
fn scheme_matrices(v: u32, n: u32) -> (Vec<Vec<u32>>, Vec<Vec<i64>>) {
    let vertices = subsets_colex(v, n);
    let count = vertices.len();
    let mut mats = vec![vec![0i64; count * count]; n as usize + 1];
    for a in 0..count {
        for b in 0..count {
            let k = intersection_size(&vertices[a], &vertices[b]) as usize;
            mats[k][a * count + b] = 1;
        }
    }
    (vertices, mats)
}

/// Adjacency matrix of `J(v, n, i)`, vertices in colexicographic order.
pub fn johnson_adjacency(spec: &JohnsonSpec) -> Result<DenseMatrix, GraphError> {
    const LIMIT: u64 = 4096;
    let count = spec.vertex_count();
    if count > BigInt::from(LIMIT) {
        let approx = u64::try_from(&count % BigInt::from(u64::MAX)).unwrap_or(u64::MAX);
        return Err(GraphError::TooLarge { v: spec.v, n: spec.n, count: approx, limit: LIMIT });
    }
    let vertices = subsets_colex(spec.v, spec.n);
    let count = vertices.len();
    let mut adj = DenseMatrix::zeros(count, count);
    for a in 0..count {
        for b in 0..count {
            if intersection_size(&vertices[a], &vertices[b]) == spec.i {
                adj.set(a, b, num_complex::Complex64::ONE);
            }
        }
    }
    Ok(adj)
}

/// Dimensions `C(v, i) − C(v, i−1)` of the scheme's joint eigenspaces,
/// for `i = 0..n`; they sum to `C(v, n)`.
pub fn scheme_eigen_dims(v: u32, n: u32) -> Vec<BigInt> {
    (0..=n as u64)
        .map(|i| {
            let prev = if i == 0 { BigInt::zero() } else { binomial(v as u64, i - 1) };
            binomial(v as u64, i) - prev
        })
        .collect()
}

/// Eigenvalues `(−1)^i (n+1−i)` of the Kneser graph `K(2n+1, n)`,
/// for `i = 0..n`, matching the eigenspace dimensions above.
pub fn kneser_eigenvalues(n: u32) -> Vec<i64> {
    (0..=n as i64)
        .map(|i| {
            let magnitude = n as i64 + 1 - i;
            if i % 2 == 0 {
                magnitude
            } else {
                -magnitude
            }
        })
        .collect()
}

/// Exact multiplier norm `2^{2n} / C(2n+1, n)` of the Kneser adjacency
/// matrix `K(2n+1, n)`, as a reduced rational.
///
/// Equals the telescoping product `Π_{i=1}^{n} (1 + 1/(2i+1))` and
/// strictly exceeds `(1/2)·log(2n+3)`.
pub fn kneser_schur_norm(n: u32) -> BigRational {
    assert!(n >= 1);
    let power = BigInt::one() << (2 * n as usize);
    let value = BigRational::new(power, binomial(2 * n as u64 + 1, n as u64));
    debug_assert_eq!(value, kneser_product_form(n));
    value
}

/// The product form `Π_{i=1}^{n} (2i+2)/(2i+1)` of the Kneser norm.
pub fn kneser_product_form(n: u32) -> BigRational {
    let mut acc = BigRational::one();
    for i in 1..=n as u64 {
        acc *= BigRational::new(BigInt::from(2 * i + 2), BigInt::from(2 * i + 1));
    }
    acc
}

/// Exact comparison of a rational against a double.
pub fn rational_exceeds(value: &BigRational, threshold: f64) -> bool {
    match BigRational::from_float(threshold) {
        Some(t) => *value > t,
        None => false,
    }
}

/// Outcome of the exact scheme verification for `(v, n)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SchemeReport {
    pub v: u32,
    pub n: u32,
    pub vertex_count: usize,
    /// All products `T_i T_j = T_j T_i` hold exactly.
    pub commuting: bool,
    /// Every product expands as `T_i T_j = Σ_k a_ijk T_k` with the
    /// structure constants counted directly from subset triples.
    pub structure_constants: bool,
    /// Number of joint eigenspaces found (expected `n + 1`).
    pub joint_eigenspaces: usize,
    pub violations: Vec<String>,
}

impl SchemeReport {
    pub fn all_ok(&self) -> bool {
        self.commuting && self.structure_constants && self.joint_eigenspaces == self.n as usize + 1
    }
}

/// Verifies, in exact integer arithmetic, that the orbit matrices of the
/// Johnson scheme commute, multiply according to the counted structure
/// constants, and generate an algebra with `n+1` joint eigenspaces.
pub fn verify_scheme(v: u32, n: u32) -> Result<SchemeReport, GraphError> {
    const LIMIT: u64 = 512;
    let spec = JohnsonSpec::new(v, n, 0)?;
    let count_big = spec.vertex_count();
    if count_big > BigInt::from(LIMIT) {
        let approx = u64::try_from(&count_big % BigInt::from(u64::MAX)).unwrap_or(u64::MAX);
        return Err(GraphError::TooLarge { v, n, count: approx, limit: LIMIT });
    }

    let (vertices, mats) = scheme_matrices(v, n);
    let count = vertices.len();
    let classes = n as usize + 1;
    let mut violations = Vec::new();

    let multiply = |x: &[i64], y: &[i64]| -> Vec<i64> {
        let mut out = vec![0i64; count * count];
        for a in 0..count {
            for k in 0..count {
                let xv = x[a * count + k];
                if xv == 0 {
                    continue;
                }
                for b in 0..count {
                    out[a * count + b] += xv * y[k * count + b];
                }
            }
        }
        out
    };

    // structure constants a_ijk counted over subset triples: fix a
    // representative pair (A, B) with |A ∩ B| = k and count admissible C
    let representative = |k: u32| -> (Vec<u32>, Vec<u32>) {
        let a: Vec<u32> = (0..n).collect();
        let b: Vec<u32> = ((n - k)..(2 * n - k)).collect();
        (a, b)
    };
    let mut constants = vec![vec![vec![0i64; classes]; classes]; classes];
    for k in 0..classes {
        let (a, b) = representative(k as u32);
        debug_assert_eq!(intersection_size(&a, &b) as usize, k);
        for c in &vertices {
            let i = intersection_size(&a, c) as usize;
            let j = intersection_size(c, &b) as usize;
            constants[i][j][k] += 1;
        }
    }

    let mut commuting = true;
    let mut structure = true;
    let products: Vec<Vec<Vec<i64>>> = (0..classes)
        .map(|i| (0..classes).map(|j| multiply(&mats[i], &mats[j])).collect())
        .collect();
    for i in 0..classes {
        for j in 0..classes {
            if products[i][j] != products[j][i] {
                commuting = false;
                violations.push(format!("T_{i} T_{j} ≠ T_{j} T_{i}"));
            }
            let mut expansion = vec![0i64; count * count];
            for k in 0..classes {
                let coeff = constants[i][j][k];
                if coeff != 0 {
                    for (slot, m) in expansion.iter_mut().zip(&mats[k]) {
                        *slot += coeff * m;
                    }
                }
            }
            if expansion != products[i][j] {
                structure = false;
                violations.push(format!("T_{i} T_{j} ≠ Σ_k a_{{{i}{j}k}} T_k"));
            }
        }
    }

    let joint = joint_eigenspace_count(&constants, classes);
    if joint != classes {
        violations.push(format!("found {joint} joint eigenspaces, expected {classes}"));
    }

    Ok(SchemeReport {
        v,
        n,
        vertex_count: count,
        commuting,
        structure_constants: structure,
        joint_eigenspaces: joint,
        violations,
    })
}

/// Number of characters of the (commutative) scheme algebra, computed as
/// the largest minimal-polynomial degree over the regular representation
/// of generic integer combinations — all in exact rational arithmetic.
fn joint_eigenspace_count(constants: &[Vec<Vec<i64>>], classes: usize) -> usize {
    // regular representation of T_i: column j holds the coefficients of
    // T_i·T_j over the basis, i.e. entry (k, j) = a_ijk
    let reg: Vec<Vec<BigRational>> = (0..classes)
        .map(|i| {
            let mut m = vec![BigRational::zero(); classes * classes];
            for j in 0..classes {
                for k in 0..classes {
                    m[k * classes + j] = BigRational::from(BigInt::from(constants[i][j][k]));
                }
            }
            m
        })
        .collect();

    let mat_mul = |x: &[BigRational], y: &[BigRational]| -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); classes * classes];
        for a in 0..classes {
            for k in 0..classes {
                if x[a * classes + k].is_zero() {
                    continue;
                }
                for b in 0..classes {
                    let add = &x[a * classes + k] * &y[k * classes + b];
                    out[a * classes + b] += add;
                }
            }
        }
        out
    };

    let mut best = 1;
    let tries = classes * classes * classes + 2;
    for t in 1..=tries as i64 {
        // generic element Σ_i t^i T_i in the regular representation
        let mut generic = vec![BigRational::zero(); classes * classes];
        let mut weight = BigRational::one();
        let t_rat = BigRational::from(BigInt::from(t));
        for reg_i in &reg {
            for (slot, entry) in generic.iter_mut().zip(reg_i) {
                *slot += &weight * entry;
            }
            weight *= &t_rat;
        }

        // minimal polynomial degree: first power lying in the span of the
        // lower ones, by exact Gaussian elimination on vectorized powers
        let mut basis: Vec<Vec<BigRational>> = Vec::new();
        let mut power: Vec<BigRational> = {
            let mut ident = vec![BigRational::zero(); classes * classes];
            for a in 0..classes {
                ident[a * classes + a] = BigRational::one();
            }
            ident
        };
        let mut degree = 0;
        loop {
            let mut reduced = power.clone();
            for pivot_row in &basis {
                let lead = pivot_row.iter().position(|x| !x.is_zero()).unwrap();
                if !reduced[lead].is_zero() {
                    let factor = &reduced[lead] / &pivot_row[lead];
                    for (r, p) in reduced.iter_mut().zip(pivot_row) {
                        *r -= &factor * p;
                    }
                }
            }
            if reduced.iter().all(|x| x.is_zero()) {
                break;
            }
            basis.push(reduced);
            degree += 1;
            if degree == classes {
                break;
            }
            power = mat_mul(&power, &generic);
        }
        best = best.max(degree);
        if best == classes {
            break;
        }
    }
    best
}

/// JSON form of an exact rational: decimal strings for numerator and
/// denominator.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RationalJson {
    pub num: String,
    pub den: String,
}

impl From<&BigRational> for RationalJson {
    fn from(r: &BigRational) -> RationalJson {
        RationalJson { num: r.numer().to_string(), den: r.denom().to_string() }
    }
}
