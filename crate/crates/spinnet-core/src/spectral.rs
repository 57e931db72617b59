//! Dense symmetric eigensolver and eigenvalue clustering.
//!
//! Eigenvalues only: Householder reduction to tridiagonal form followed
//! by the implicit-shift QL iteration, the classic pair of routines for
//! full symmetric spectra. Input matrices must be exactly symmetric
//! (the operator builders guarantee this bit for bit) and small enough
//! for a dense copy; both conditions are checked, not assumed.
//!
//! Clustering walks the sorted spectrum once and starts a new level
//! whenever the gap to the previous eigenvalue exceeds
//! `rel_tol * max(1, |lambda|_max)`. Each level reports the mean of its
//! members and the member count; the smallest gap that actually split
//! two levels is kept as a diagnostic, so callers can tell how far the
//! clustering was from a different answer.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::manybody::ManyBodyMatrix;

/// Default relative tolerance for clustering eigenvalues into levels.
pub const DEFAULT_REL_TOL: f64 = 1e-8;

/// Default cap on the dimension of a dense eigenproblem.
pub const DEFAULT_DENSE_LIMIT: usize = 4096;

/// QL sweeps allowed per eigenvalue before giving up.
const MAX_QL_SWEEPS: usize = 50;

#[derive(Debug, Clone, PartialEq)]
pub enum SpectralError {
    /// Entry (row, col) has no matching transpose entry.
    NotSymmetric { row: usize, col: usize },
    /// Matrix too large for a dense solve.
    DenseLimitExceeded { dimension: usize, limit: usize },
    /// Dense buffer length is not dimension squared.
    BadDenseLength { len: usize, dimension: usize },
    /// QL iteration failed to deflate an eigenvalue.
    NoConvergence { index: usize },
}

impl fmt::Display for SpectralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SpectralError::NotSymmetric { row, col } => {
                write!(f, "matrix is not symmetric at ({row}, {col})")
            }
            SpectralError::DenseLimitExceeded { dimension, limit } => {
                write!(f, "dimension {dimension} exceeds the dense limit {limit}")
            }
            SpectralError::BadDenseLength { len, dimension } => {
                write!(f, "dense buffer has {len} entries, expected {dimension}^2")
            }
            SpectralError::NoConvergence { index } => {
                write!(f, "QL iteration did not converge at index {index}")
            }
        }
    }
}

impl core::error::Error for SpectralError {}

/// Eigenvalues sorted ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
}

impl Spectrum {
    pub fn from_unsorted(mut eigenvalues: Vec<f64>) -> Self {
        eigenvalues.sort_by(f64::total_cmp);
        Self { eigenvalues }
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn max_abs(&self) -> f64 {
        self.eigenvalues.iter().fold(0.0, |m, &v| m.max(v.abs()))
    }
}

/// One cluster of near-equal eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Level {
    /// Mean of the member eigenvalues.
    pub value: f64,
    /// Number of members.
    pub multiplicity: usize,
}

/// Clustered spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelSet {
    levels: Vec<Level>,
    rel_tol: f64,
    min_split_gap: f64,
}

impl LevelSet {
    /// Levels in ascending order of value.
    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn distinct_count(&self) -> usize {
        self.levels.len()
    }

    pub fn multiplicity_sum(&self) -> usize {
        self.levels.iter().map(|l| l.multiplicity).sum()
    }

    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }

    /// Smallest gap that separated two levels; infinite when fewer than
    /// two levels exist. A value close to the threshold means the level
    /// count is fragile under the chosen tolerance.
    pub fn min_split_gap(&self) -> f64 {
        self.min_split_gap
    }
}

/// Eigenvalues of an exactly symmetric sparse matrix, dense solve with
/// the default dimension cap.
pub fn eigenvalues_symmetric(matrix: &ManyBodyMatrix) -> Result<Spectrum, SpectralError> {
    eigenvalues_symmetric_with_limit(matrix, DEFAULT_DENSE_LIMIT)
}

/// Like [`eigenvalues_symmetric`] with an explicit dense limit.
pub fn eigenvalues_symmetric_with_limit(
    matrix: &ManyBodyMatrix,
    dense_limit: usize,
) -> Result<Spectrum, SpectralError> {
    let n = matrix.dimension();
    if n > dense_limit {
        return Err(SpectralError::DenseLimitExceeded {
            dimension: n,
            limit: dense_limit,
        });
    }
    for ((r, c), v) in matrix.entries() {
        if r != c && matrix.get(c, r) != v {
            return Err(SpectralError::NotSymmetric { row: r, col: c });
        }
    }
    let mut dense = matrix.to_dense();
    let eigenvalues = solve_dense(n, &mut dense)?;
    Ok(Spectrum {
        eigenvalues,
    })
}

/// Eigenvalues of a row-major dense symmetric matrix.
pub fn eigenvalues_dense_symmetric(
    dimension: usize,
    data: &[f64],
    dense_limit: usize,
) -> Result<Spectrum, SpectralError> {
    if data.len() != dimension * dimension {
        return Err(SpectralError::BadDenseLength {
            len: data.len(),
            dimension,
        });
    }
    if dimension > dense_limit {
        return Err(SpectralError::DenseLimitExceeded {
            dimension,
            limit: dense_limit,
        });
    }
    for r in 0..dimension {
        for c in r + 1..dimension {
            if data[r * dimension + c] != data[c * dimension + r] {
                return Err(SpectralError::NotSymmetric { row: r, col: c });
            }
        }
    }
    let mut work = data.to_vec();
    let eigenvalues = solve_dense(dimension, &mut work)?;
    Ok(Spectrum { eigenvalues })
}

fn solve_dense(n: usize, a: &mut [f64]) -> Result<Vec<f64>, SpectralError> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tridiagonalize(n, a, &mut d, &mut e);
    ql_implicit(&mut d, &mut e)?;
    d.sort_by(f64::total_cmp);
    Ok(d)
}

/// Householder reduction of a symmetric matrix to tridiagonal form,
/// without accumulating the transformations. On return `d` holds the
/// diagonal and `e[1..]` the subdiagonal. The matrix buffer is
/// destroyed.
fn tridiagonalize(n: usize, a: &mut [f64], d: &mut [f64], e: &mut [f64]) {
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let mut scale = 0.0;
            for k in 0..=l {
                scale += a[i * n + k].abs();
            }
            if scale == 0.0 {
                // row already deflated
                e[i] = a[i * n + l];
            } else {
                for k in 0..=l {
                    a[i * n + k] /= scale;
                    h += a[i * n + k] * a[i * n + k];
                }
                let f = a[i * n + l];
                let g = if f >= 0.0 { -libm::sqrt(h) } else { libm::sqrt(h) };
                e[i] = scale * g;
                h -= f * g;
                a[i * n + l] = f - g;
                let mut fsum = 0.0;
                for j in 0..=l {
                    let mut g = 0.0;
                    for k in 0..=j {
                        g += a[j * n + k] * a[i * n + k];
                    }
                    for k in j + 1..=l {
                        g += a[k * n + j] * a[i * n + k];
                    }
                    e[j] = g / h;
                    fsum += e[j] * a[i * n + j];
                }
                let hh = fsum / (h + h);
                for j in 0..=l {
                    let f = a[i * n + j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[j * n + k] -= f * e[k] + g * a[i * n + k];
                    }
                }
            }
        } else {
            e[i] = a[i * n + l];
        }
        d[i] = h;
    }
    e[0] = 0.0;
    for i in 0..n {
        d[i] = a[i * n + i];
    }
}

/// Implicit-shift QL iteration on a tridiagonal matrix. `d` is the
/// diagonal, `e[1..]` the subdiagonal; eigenvalues land in `d`,
/// unordered.
fn ql_implicit(d: &mut [f64], e: &mut [f64]) -> Result<(), SpectralError> {
    let n = d.len();
    if n <= 1 {
        return Ok(());
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    // Gershgorin bound on the spectral radius. Off-diagonals below
    // EPSILON * scale are roundoff for any backward-stable method and must be
    // deflated even when the neighbouring diagonal entries are tiny; a purely
    // local threshold stalls on matrices whose norm is O(1) but which carry a
    // large eigenvalue cluster near zero.
    let mut scale = 0.0f64;
    for i in 0..n {
        let left = if i > 0 { e[i - 1].abs() } else { 0.0 };
        let row = left + d[i].abs() + e[i].abs();
        if row > scale {
            scale = row;
        }
    }
    let floor = f64::EPSILON * scale;
    for l in 0..n {
        let mut sweeps = 0;
        'sweep: loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= (f64::EPSILON * dd).max(floor) {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_QL_SWEEPS {
                return Err(SpectralError::NoConvergence { index: l });
            }
            // e[l] != 0 here, otherwise m would have stopped at l
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = libm::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + libm::copysign(r, g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = libm::hypot(f, g);
                e[i + 1] = r;
                if r == 0.0 {
                    // rotation underflowed; deflate and restart the sweep
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    continue 'sweep;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// Group a sorted spectrum into levels. A new level starts when the gap
/// between consecutive eigenvalues exceeds
/// `rel_tol * max(1, |lambda|_max)`.
///
/// `rel_tol` must be positive and finite.
pub fn cluster(spectrum: &Spectrum, rel_tol: f64) -> LevelSet {
    assert!(
        rel_tol.is_finite() && rel_tol > 0.0,
        "rel_tol must be positive and finite"
    );
    let ev = spectrum.eigenvalues();
    let mut levels = Vec::new();
    if ev.is_empty() {
        return LevelSet {
            levels,
            rel_tol,
            min_split_gap: f64::INFINITY,
        };
    }
    let threshold = rel_tol * spectrum.max_abs().max(1.0);
    let mut min_split_gap = f64::INFINITY;
    let mut sum = ev[0];
    let mut count = 1usize;
    for i in 1..ev.len() {
        let gap = ev[i] - ev[i - 1];
        if gap > threshold {
            levels.push(Level {
                value: sum / count as f64,
                multiplicity: count,
            });
            min_split_gap = min_split_gap.min(gap);
            sum = 0.0;
            count = 0;
        }
        sum += ev[i];
        count += 1;
    }
    levels.push(Level {
        value: sum / count as f64,
        multiplicity: count,
    });
    LevelSet {
        levels,
        rel_tol,
        min_split_gap,
    }
}

/// Number of distinct levels under the default tolerance.
pub fn distinct_count(spectrum: &Spectrum) -> usize {
    cluster(spectrum, DEFAULT_REL_TOL).distinct_count()
}
