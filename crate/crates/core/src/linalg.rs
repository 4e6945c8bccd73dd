//! Dense complex Hermitian operators and a cyclic Jacobi eigensolver.
//!
//! Operators are stored row-major. The solver annihilates one off-diagonal
//! pair at a time with a unitary plane rotation (a phase on the `q` axis to
//! make the pivot real, followed by an ordinary Jacobi rotation) and sweeps
//! until the off-diagonal Frobenius norm falls below [`JACOBI_TOL`] relative
//! to the operator norm.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Hermiticity tolerance used by [`HermitianOperator::new`].
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Off-diagonal norm tolerance for the Jacobi sweeps.
pub const JACOBI_TOL: f64 = 1e-13;

/// Largest dimension accepted by the eigensolver-backed operations.
pub const MAX_DIM: usize = 4096;

const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq)]
pub struct HermitianOperator {
    dim: usize,
    entries: Vec<Complex64>,
}

impl HermitianOperator {
    /// Builds an operator from row-major entries, checking Hermiticity.
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::out_of_range("dim", 0.0, "[1, inf)"));
        }
        if entries.len() != dim * dim {
            return Err(Error::Config(format!(
                "expected {} entries for a {dim}x{dim} operator, got {}",
                dim * dim,
                entries.len()
            )));
        }
        let op = HermitianOperator { dim, entries };
        let dev = op.hermiticity_deviation();
        if dev > HERMITIAN_TOL {
            return Err(Error::NotHermitian(dev));
        }
        Ok(op)
    }

    /// Skips the Hermiticity check; callers guarantee it by construction.
    pub(crate) fn from_entries_unchecked(dim: usize, entries: Vec<Complex64>) -> Self {
        debug_assert_eq!(entries.len(), dim * dim);
        HermitianOperator { dim, entries }
    }

    pub fn zeros(dim: usize) -> Self {
        HermitianOperator {
            dim,
            entries: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        let mut op = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            op.entries[i * op.dim + i] = Complex64::new(d, 0.0);
        }
        op
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_diagonal(&vec![1.0; dim])
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Largest `|A_ij - conj(A_ji)|`.
    pub fn hermiticity_deviation(&self) -> f64 {
        let n = self.dim;
        let mut dev = 0.0f64;
        for i in 0..n {
            for j in i..n {
                dev = dev.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        dev
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i).re).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &HermitianOperator) -> HermitianOperator {
        let (n, m) = (self.dim, other.dim);
        let dim = n * m;
        let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for k in 0..m {
                    let row = (i * m + k) * dim + j * m;
                    for l in 0..m {
                        entries[row + l] = a * other.get(k, l);
                    }
                }
            }
        }
        HermitianOperator { dim, entries }
    }

    pub fn sub(&self, other: &HermitianOperator) -> Result<HermitianOperator> {
        self.check_same_dim(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(HermitianOperator { dim: self.dim, entries })
    }

    /// Plain matrix product. The result is Hermitian only when the factors
    /// commute or form a sandwich, so it is returned as raw entries.
    pub fn matmul(&self, other: &HermitianOperator) -> Result<Vec<Complex64>> {
        self.check_same_dim(other)?;
        let n = self.dim;
        let mut out = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                for j in 0..n {
                    out[i * n + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// `self · middle · self`, symmetrized to absorb rounding.
    pub fn sandwich(&self, middle: &HermitianOperator) -> Result<HermitianOperator> {
        let left = self.matmul(middle)?;
        let left = HermitianOperator { dim: self.dim, entries: left };
        let mut out = left.matmul(self)?;
        let n = self.dim;
        for i in 0..n {
            for j in i..n {
                let avg = 0.5 * (out[i * n + j] + out[j * n + i].conj());
                out[i * n + j] = avg;
                out[j * n + i] = avg.conj();
            }
        }
        Ok(HermitianOperator { dim: n, entries: out })
    }

    fn check_same_dim(&self, other: &HermitianOperator) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::Config(format!(
                "dimension mismatch: {} vs {}",
                self.dim, other.dim
            )));
        }
        Ok(())
    }

    fn check_dim_cap(&self) -> Result<()> {
        if self.dim > MAX_DIM {
            return Err(Error::ResourceCap(format!(
                "operator dimension {} exceeds {MAX_DIM}",
                self.dim
            )));
        }
        Ok(())
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        self.check_dim_cap()?;
        let mut work = self.entries.clone();
        let mut vals = jacobi(self.dim, &mut work, None);
        vals.sort_by(f64::total_cmp);
        Ok(vals)
    }

    /// Eigenvalues (ascending) with the matching orthonormal eigenvectors.
    pub fn eigen(&self) -> Result<Eigen> {
        self.check_dim_cap()?;
        let n = self.dim;
        let mut work = self.entries.clone();
        let mut vecs = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            vecs[i * n + i] = Complex64::new(1.0, 0.0);
        }
        let vals = jacobi(n, &mut work, Some(&mut vecs));
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| vals[a].total_cmp(&vals[b]));
        let values = order.iter().map(|&i| vals[i]).collect();
        let mut vectors = vec![Complex64::new(0.0, 0.0); n * n];
        for (new_col, &old_col) in order.iter().enumerate() {
            for row in 0..n {
                vectors[row * n + new_col] = vecs[row * n + old_col];
            }
        }
        Ok(Eigen { dim: n, values, vectors })
    }

    /// Sum of absolute eigenvalues.
    pub fn trace_norm(&self) -> Result<f64> {
        Ok(self.eigenvalues()?.iter().map(|l| l.abs()).sum())
    }
}

/// Spectral decomposition `A = V diag(values) V†`; eigenvectors are the
/// columns of the row-major `vectors`.
#[derive(Debug, Clone)]
pub struct Eigen {
    pub dim: usize,
    pub values: Vec<f64>,
    pub vectors: Vec<Complex64>,
}

impl Eigen {
    /// Rebuilds `V diag(f(values)) V†`.
    pub fn map_spectrum(&self, f: impl Fn(f64) -> f64) -> HermitianOperator {
        let n = self.dim;
        let fv: Vec<f64> = self.values.iter().map(|&l| f(l)).collect();
        let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for (k, &w) in fv.iter().enumerate() {
                    if w != 0.0 {
                        acc += self.vectors[i * n + k] * self.vectors[j * n + k].conj() * w;
                    }
                }
                entries[i * n + j] = acc;
            }
        }
        HermitianOperator { dim: n, entries }
    }
}

fn off_diagonal_norm(n: usize, a: &[Complex64]) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[i * n + j].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// Cyclic complex Jacobi. Leaves `a` (approximately) diagonal and returns its
/// diagonal; accumulates the rotations into `vecs` when given.
fn jacobi(n: usize, a: &mut [Complex64], mut vecs: Option<&mut [Complex64]>) -> Vec<f64> {
    let scale = a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt().max(1.0);
    let threshold = JACOBI_TOL * scale;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(n, a) <= threshold {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let g = a[p * n + q];
                let abs_g = g.norm();
                if abs_g <= f64::MIN_POSITIVE {
                    continue;
                }
                let phase = (g / abs_g).conj();
                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                let theta = (aqq - app) / (2.0 * abs_g);
                let t = if theta.is_infinite() {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // J = D·R with D = diag(1, phase) on (p, q).
                let j_pp = Complex64::new(c, 0.0);
                let j_pq = Complex64::new(s, 0.0);
                let j_qp = phase * (-s);
                let j_qq = phase * c;

                // A <- A J
                for r in 0..n {
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    a[r * n + p] = arp * j_pp + arq * j_qp;
                    a[r * n + q] = arp * j_pq + arq * j_qq;
                }
                // A <- J† A
                for col in 0..n {
                    let apc = a[p * n + col];
                    let aqc = a[q * n + col];
                    a[p * n + col] = j_pp.conj() * apc + j_qp.conj() * aqc;
                    a[q * n + col] = j_pq.conj() * apc + j_qq.conj() * aqc;
                }
                a[p * n + q] = Complex64::new(0.0, 0.0);
                a[q * n + p] = Complex64::new(0.0, 0.0);
                a[p * n + p] = Complex64::new(a[p * n + p].re, 0.0);
                a[q * n + q] = Complex64::new(a[q * n + q].re, 0.0);

                if let Some(v) = vecs.as_deref_mut() {
                    for r in 0..n {
                        let vrp = v[r * n + p];
                        let vrq = v[r * n + q];
                        v[r * n + p] = vrp * j_pp + vrq * j_qp;
                        v[r * n + q] = vrp * j_pq + vrq * j_qq;
                    }
                }
            }
        }
    }
    (0..n).map(|i| a[i * n + i].re).collect()
}
