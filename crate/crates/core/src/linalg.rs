//! Dense real symmetric matrices and the density-operator toolkit built on them.
//!
//! Every state handled here has nonnegative real amplitudes, so all operators
//! are real symmetric and a cyclic Jacobi eigensolver is enough for the
//! matrix functions (square root, logarithm-based entropy) we need. Matrices
//! are small (a few dozen rows at most).

use std::fmt;

use crate::error::{Error, Result};

/// Eigenvalues below this are treated as round-off and clamped to zero.
pub const EIGEN_FLOOR: f64 = -1e-10;
/// Eigenvalues below this indicate a construction bug and are rejected.
pub const PSD_TOLERANCE: f64 = -1e-8;
/// Allowed deviation of a density operator's trace from one.
pub const TRACE_TOLERANCE: f64 = 1e-9;

const JACOBI_OFF_DIAGONAL_TOL: f64 = 1e-12;
const JACOBI_MAX_SWEEPS: usize = 100;
const ENTROPY_CUTOFF: f64 = 1e-12;
/// Eigenvalues below this fraction of the spectral radius are treated as
/// exact zeros before taking square roots; Jacobi only resolves them to
/// about 1e-16 and their roots would leak ~1e-8 noise.
const SQRT_RELATIVE_CUTOFF: f64 = 1e-14;
/// Relative column-overlap tolerance for the one-sided Jacobi SVD.
const SVD_ORTHOGONALITY_TOL: f64 = 1e-15;

/// A square real matrix whose entries satisfy `m[i][j] == m[j][i]` exactly.
#[derive(Clone, PartialEq)]
pub struct SymMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be positive");
        SymMatrix {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = 1.0;
        }
        m
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m.data[i * values.len() + i] = v;
        }
        m
    }

    /// Builds a matrix from rows, rejecting anything that is not square and
    /// exactly symmetric.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch { expected: 1, actual: 0 });
        }
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    actual: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        for i in 0..dim {
            for j in (i + 1)..dim {
                if data[i * dim + j] != data[j * dim + i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(SymMatrix { dim, data })
    }

    /// Builds a matrix from its upper triangle; `f(i, j)` is only called for `i <= j`.
    pub fn from_upper(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in i..dim {
                let v = f(i, j);
                m.data[i * dim + j] = v;
                m.data[j * dim + i] = v;
            }
        }
        m
    }

    /// Outer product `v vᵀ`.
    pub fn outer(v: &[f64]) -> Self {
        Self::from_upper(v.len(), |i, j| v[i] * v[j])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.dim + col]
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.dim).map(<[f64]>::to_vec).collect()
    }

    /// Plain matrix product. The result is symmetrized by averaging, which
    /// is exact for products that are mathematically symmetric (`A A`,
    /// `A B A`) up to round-off.
    pub fn mul_symmetrized(&self, other: &SymMatrix) -> SymMatrix {
        let p = self.matmul(other);
        let n = self.dim;
        Self::from_upper(n, |i, j| 0.5 * (p[i * n + j] + p[j * n + i]))
    }

    /// `self · middle · self`, symmetrized.
    pub fn sandwich(&self, middle: &SymMatrix) -> SymMatrix {
        let n = self.dim;
        let left = self.matmul(middle);
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = left[i * n + k];
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += a * self.data[k * n + j];
                }
            }
        }
        Self::from_upper(n, |i, j| 0.5 * (out[i * n + j] + out[j * n + i]))
    }

    fn matmul(&self, other: &SymMatrix) -> Vec<f64> {
        assert_eq!(self.dim, other.dim, "matmul dimension mismatch");
        let n = self.dim;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        out
    }

    /// Largest absolute entrywise difference.
    pub fn max_abs_diff(&self, other: &SymMatrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Embeds the matrix in the top-left corner of a larger zero matrix.
    pub fn zero_padded(&self, dim: usize) -> SymMatrix {
        assert!(dim >= self.dim);
        if dim == self.dim {
            return self.clone();
        }
        let mut m = Self::zeros(dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m.data[i * dim + j] = self.get(i, j);
            }
        }
        m
    }

    /// Eigendecomposition by cyclic Jacobi rotations.
    pub fn eigen(&self) -> Eigen {
        jacobi(self)
    }

    /// Rebuilds `V · diag(f(λ)) · Vᵀ`.
    fn spectral_map(eig: &Eigen, f: impl Fn(f64) -> f64) -> SymMatrix {
        let n = eig.values.len();
        let mapped: Vec<f64> = eig.values.iter().map(|&l| f(l)).collect();
        Self::from_upper(n, |i, j| {
            (0..n)
                .map(|k| eig.vectors[i * n + k] * mapped[k] * eig.vectors[j * n + k])
                .sum()
        })
    }
}

impl fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.data.chunks(self.dim)).finish()
    }
}

/// Eigenvalues with eigenvectors stored column-wise in a row-major `dim × dim` buffer.
#[derive(Debug, Clone)]
pub struct Eigen {
    pub values: Vec<f64>,
    vectors: Vec<f64>,
}

impl Eigen {
    /// Component `row` of the eigenvector belonging to `values[k]`.
    pub fn vector_component(&self, row: usize, k: usize) -> f64 {
        self.vectors[row * self.values.len() + k]
    }
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

fn jacobi(m: &SymMatrix) -> Eigen {
    let n = m.dim;
    let mut a = m.data.clone();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_diagonal_norm(&a, n) < JACOBI_OFF_DIAGONAL_TOL {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                // signum(0) is 1.0 in Rust, so theta == 0 gives t = 1 as required.
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;

                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    Eigen {
        values: (0..n).map(|i| a[i * n + i]).collect(),
        vectors: v,
    }
}

/// Clamps round-off negatives to zero, rejecting genuinely negative spectra.
fn clamp_spectrum(values: &mut [f64]) -> Result<()> {
    for l in values.iter_mut() {
        if *l < PSD_TOLERANCE {
            return Err(Error::NotPsd { eigenvalue: *l });
        }
        if *l < 0.0 {
            *l = 0.0;
        }
    }
    Ok(())
}

/// A unit-trace positive-semidefinite [`SymMatrix`].
#[derive(Clone, PartialEq)]
pub struct DensityOperator(SymMatrix);

impl DensityOperator {
    /// Validates trace and spectrum.
    pub fn new(matrix: SymMatrix) -> Result<Self> {
        let trace = matrix.trace();
        if (trace - 1.0).abs() > TRACE_TOLERANCE {
            return Err(Error::NotUnitTrace { trace });
        }
        let eig = matrix.eigen();
        if let Some(&bad) = eig.values.iter().find(|&&l| l < EIGEN_FLOOR) {
            return Err(Error::NotPsd { eigenvalue: bad });
        }
        Ok(DensityOperator(matrix))
    }

    /// Projector onto a unit vector. Positivity holds by construction, so
    /// only the trace is checked.
    pub fn pure(state: &[f64]) -> Result<Self> {
        let m = SymMatrix::outer(state);
        let trace = m.trace();
        if (trace - 1.0).abs() > TRACE_TOLERANCE {
            return Err(Error::NotUnitTrace { trace });
        }
        Ok(DensityOperator(m))
    }

    pub fn matrix(&self) -> &SymMatrix {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn trace(&self) -> f64 {
        self.0.trace()
    }

    /// Zero-padding keeps the operator a valid density operator with the same
    /// nonzero spectrum.
    pub fn zero_padded(&self, dim: usize) -> DensityOperator {
        DensityOperator(self.0.zero_padded(dim))
    }
}

impl fmt::Debug for DensityOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Principal square root of a positive-semidefinite matrix.
pub fn matrix_sqrt(m: &SymMatrix) -> Result<SymMatrix> {
    let mut eig = m.eigen();
    clamp_spectrum(&mut eig.values)?;
    let floor = SQRT_RELATIVE_CUTOFF * eig.values.iter().fold(0.0f64, |a, &l| a.max(l));
    Ok(SymMatrix::spectral_map(
        &eig,
        |l| if l > floor { l.sqrt() } else { 0.0 },
    ))
}

/// Which subsystem survives a partial trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    X,
    Y,
}

/// Partial trace of an operator on `X ⊗ Y` with basis `|x, y⟩` at index
/// `x * dim_y + y`.
pub fn partial_trace(rho: &DensityOperator, dims: (usize, usize), keep: Subsystem) -> Result<DensityOperator> {
    let (dx, dy) = dims;
    if dx == 0 || dy == 0 || rho.dim() != dx * dy {
        return Err(Error::DimensionMismatch {
            expected: dx * dy,
            actual: rho.dim(),
        });
    }
    let m = &rho.0;
    let reduced = match keep {
        Subsystem::X => SymMatrix::from_upper(dx, |i, k| (0..dy).map(|j| m.get(i * dy + j, k * dy + j)).sum()),
        Subsystem::Y => SymMatrix::from_upper(dy, |j, l| (0..dx).map(|i| m.get(i * dy + j, i * dy + l)).sum()),
    };
    Ok(DensityOperator(reduced))
}

/// Singular values of a row-major `n × n` matrix by one-sided Jacobi
/// (Hestenes) rotations: columns are orthogonalized in place and their norms
/// returned.
fn singular_values(mut x: Vec<f64>, n: usize) -> Vec<f64> {
    for _ in 0..JACOBI_MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let (mut alpha, mut beta, mut gamma) = (0.0, 0.0, 0.0);
                for k in 0..n {
                    let (xp, xq) = (x[k * n + p], x[k * n + q]);
                    alpha += xp * xp;
                    beta += xq * xq;
                    gamma += xp * xq;
                }
                if gamma == 0.0 || gamma.abs() <= SVD_ORTHOGONALITY_TOL * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for k in 0..n {
                    let (xp, xq) = (x[k * n + p], x[k * n + q]);
                    x[k * n + p] = c * xp - s * xq;
                    x[k * n + q] = s * xp + c * xq;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    (0..n)
        .map(|j| (0..n).map(|k| x[k * n + j] * x[k * n + j]).sum::<f64>().sqrt())
        .collect()
}

/// Uhlmann fidelity `tr √(√a · b · √a)`, clamped into `[0, 1]`.
///
/// Evaluated as the sum of singular values of `√a · √b`, which is the same
/// quantity since `√a · b · √a = (√a √b)(√a √b)ᵀ`. Going through the SVD
/// avoids squaring small eigenvalues and then taking their roots again.
pub fn fidelity(a: &DensityOperator, b: &DensityOperator) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            actual: b.dim(),
        });
    }
    let root_a = matrix_sqrt(&a.0)?;
    let root_b = matrix_sqrt(&b.0)?;
    let f: f64 = singular_values(root_a.matmul(&root_b), a.dim()).iter().sum();
    Ok(f.clamp(0.0, 1.0))
}

/// Von Neumann entropy in bits.
pub fn von_neumann_entropy(rho: &DensityOperator) -> Result<f64> {
    let mut eig = rho.0.eigen();
    clamp_spectrum(&mut eig.values)?;
    let s: f64 = eig
        .values
        .iter()
        .filter(|&&l| l > ENTROPY_CUTOFF)
        .map(|&l| -l * l.log2())
        .sum();
    Ok(s.max(0.0))
}
