//! Largest eigenvalues of small symmetric matrices, and the two spectral
//! indices built on them.
//!
//! The Q-index of a graph is the largest eigenvalue of its signless
//! Laplacian `Q = D + A`; the adjacency index is the largest eigenvalue of
//! `A`. Both are computed by a cyclic Jacobi rotation scheme: deterministic
//! (no pivot searching, no randomness), numerically robust for the dense
//! matrices of order at most 64 this crate produces, and convergent to
//! machine precision in a handful of sweeps.

use crate::graph::{DegreeProfile, Graph};
use thiserror::Error;

/// Default absolute tolerance for the largest-eigenvalue computations.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Smallest accepted tolerance; below this, rounding in the rotations
/// dominates and the request cannot be honored.
pub const MIN_TOL: f64 = 1e-12;

/// Cyclic Jacobi converges quadratically once the off-diagonal mass is
/// small; 64 sweeps is far beyond what any order-64 matrix needs, so
/// hitting the cap signals a genuine malfunction rather than slowness.
const MAX_SWEEPS: usize = 64;

#[derive(Debug, Error, PartialEq)]
pub enum SpectralError {
    #[error("matrix must be square and non-empty")]
    BadShape,
    #[error("matrix not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },
    #[error("matrix entry ({i}, {j}) is not finite")]
    NonFinite { i: usize, j: usize },
    #[error("tolerance {tol} invalid (need a finite value >= {MIN_TOL})")]
    BadTolerance { tol: f64 },
    #[error("Jacobi failed to converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },
}

/// Dense symmetric matrix, row-major full storage.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    /// Zero matrix of dimension `n >= 1`.
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "empty matrix");
        SymmetricMatrix { n, data: vec![0.0; n * n] }
    }

    /// Validate symmetry and finiteness of explicit rows.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, SpectralError> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(SpectralError::BadShape);
        }
        for i in 0..n {
            for j in 0..n {
                if !rows[i][j].is_finite() {
                    return Err(SpectralError::NonFinite { i, j });
                }
                if rows[i][j] != rows[j][i] {
                    return Err(SpectralError::NotSymmetric { i, j });
                }
            }
        }
        let mut m = SymmetricMatrix::zero(n);
        for i in 0..n {
            m.data[i * n..(i + 1) * n].copy_from_slice(&rows[i]);
        }
        Ok(m)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Set both `(i, j)` and `(j, i)`.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
        self.data[j * self.n + i] = value;
    }

    /// Maximum absolute row sum.
    pub fn infinity_norm(&self) -> f64 {
        (0..self.n)
            .map(|i| self.data[i * self.n..(i + 1) * self.n].iter().map(|x| x.abs()).sum())
            .fold(0.0, f64::max)
    }

    fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

/// Adjacency matrix `A`.
pub fn adjacency(g: &Graph) -> SymmetricMatrix {
    let n = g.n();
    let mut m = SymmetricMatrix::zero(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if g.has_edge(u, v) {
                m.set(u, v, 1.0);
            }
        }
    }
    m
}

/// Signless Laplacian `Q = D + A`.
pub fn signless_laplacian(g: &Graph) -> SymmetricMatrix {
    let mut m = adjacency(g);
    for v in 0..g.n() {
        m.set(v, v, g.degree(v) as f64);
    }
    m
}

/// Largest eigenvalue with its eigenvector and an a-posteriori residual.
#[derive(Debug, Clone)]
pub struct SpectralResult {
    /// Largest eigenvalue.
    pub value: f64,
    /// Unit eigenvector (2-norm, largest-magnitude entry made positive).
    pub vector: Vec<f64>,
    /// `max_i |(M v)_i - value * v_i|`, computed against the input matrix.
    pub residual: f64,
}

/// Sum of squares of off-diagonal entries, as a norm.
fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            s += 2.0 * a[i * n + j] * a[i * n + j];
        }
    }
    s.sqrt()
}

fn jacobi_largest(
    m: &SymmetricMatrix,
    tol: f64,
    max_sweeps: usize,
) -> Result<SpectralResult, SpectralError> {
    if !tol.is_finite() || tol < MIN_TOL {
        return Err(SpectralError::BadTolerance { tol });
    }
    let n = m.n;
    let mut a = m.data.clone();
    let mut v = vec![0.0f64; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    // Drive the off-diagonal norm below a hundredth of the requested
    // tolerance, but never below what rounding permits for this matrix.
    let floor = n as f64 * f64::EPSILON * m.frobenius_norm().max(1.0);
    let threshold = (0.01 * tol).max(floor);

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a, n);
        if off <= threshold {
            break;
        }
        if sweeps == max_sweeps {
            return Err(SpectralError::NoConvergence { sweeps, off_norm: off });
        }
        sweeps += 1;
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                // Stable tangent of the annihilating rotation angle.
                let diff = a[q * n + q] - a[p * n + p];
                let t = if apq.abs() * 100.0 < diff.abs() * f64::EPSILON {
                    apq / diff
                } else {
                    let theta = 0.5 * diff / apq;
                    let t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                    if theta < 0.0 {
                        -t
                    } else {
                        t
                    }
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                a[p * n + p] -= t * apq;
                a[q * n + q] += t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r != p && r != q {
                        let arp = a[r * n + p];
                        let arq = a[r * n + q];
                        let new_p = arp - s * (arq + tau * arp);
                        let new_q = arq + s * (arp - tau * arq);
                        a[r * n + p] = new_p;
                        a[p * n + r] = new_p;
                        a[r * n + q] = new_q;
                        a[q * n + r] = new_q;
                    }
                    let vrp = v[r * n + p];
                    let vrq = v[r * n + q];
                    v[r * n + p] = vrp - s * (vrq + tau * vrp);
                    v[r * n + q] = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }

    // Largest diagonal entry (first index on exact ties) and its column.
    let mut best = 0;
    for i in 1..n {
        if a[i * n + i] > a[best * n + best] {
            best = i;
        }
    }
    let value = a[best * n + best];
    let mut vector: Vec<f64> = (0..n).map(|r| v[r * n + best]).collect();
    let norm = vector.iter().map(|x| x * x).sum::<f64>().sqrt();
    for x in &mut vector {
        *x /= norm;
    }
    // Deterministic sign: flip so the largest-magnitude entry is positive.
    let lead = vector.iter().cloned().fold(0.0f64, |acc, x| if x.abs() > acc.abs() { x } else { acc });
    if lead < 0.0 {
        for x in &mut vector {
            *x = -*x;
        }
    }

    let mut residual = 0.0f64;
    for i in 0..n {
        let mut row = 0.0;
        for j in 0..n {
            row += m.data[i * n + j] * vector[j];
        }
        residual = residual.max((row - value * vector[i]).abs());
    }
    Ok(SpectralResult { value, vector, residual })
}

/// Largest eigenvalue of a symmetric matrix by cyclic Jacobi rotations.
///
/// Deterministic: identical input bits give identical output bits. The
/// eigenvalue is accurate to roughly the off-diagonal threshold (see
/// [`MIN_TOL`]); `residual` reports the achieved quality a posteriori.
pub fn largest_eigenvalue(
    m: &SymmetricMatrix,
    tol: f64,
) -> Result<SpectralResult, SpectralError> {
    jacobi_largest(m, tol, MAX_SWEEPS)
}

/// Q-index: largest eigenvalue of the signless Laplacian, at [`DEFAULT_TOL`].
pub fn q_index(g: &Graph) -> Result<f64, SpectralError> {
    Ok(largest_eigenvalue(&signless_laplacian(g), DEFAULT_TOL)?.value)
}

/// Adjacency index: largest adjacency eigenvalue, at [`DEFAULT_TOL`].
pub fn mu_index(g: &Graph) -> Result<f64, SpectralError> {
    Ok(largest_eigenvalue(&adjacency(g), DEFAULT_TOL)?.value)
}

/// Row sums of `M = Q^2 - (max_degree + 2 min_degree - 1) Q`, evaluated by
/// the closed identity `r_k(Q) = 2 d_k` and
/// `r_k(Q^2) = 2 d_k^2 + 2 sum_{i ~ k} d_i` instead of forming `M`.
pub fn m_rowsums(g: &Graph) -> Vec<f64> {
    let p = g.degree_profile();
    let shift = p.max_degree as f64 + 2.0 * p.min_degree as f64 - 1.0;
    (0..g.n())
        .map(|k| {
            let dk = p.degrees[k] as f64;
            let neighbor_sum: usize =
                crate::graph::bits(g.neighbors(k)).map(|i| p.degrees[i]).sum();
            2.0 * dk * dk + 2.0 * neighbor_sum as f64 - shift * 2.0 * dk
        })
        .collect()
}

/// Upper limit on every row sum of `M`: `4m - 2(n - 1 + max_degree) *
/// min_degree`. The quadratic bound on the Q-index follows from it.
pub fn m_rowsum_limit(p: &DegreeProfile) -> f64 {
    4.0 * p.m as f64 - 2.0 * (p.n as f64 - 1.0 + p.max_degree as f64) * p.min_degree as f64
}
