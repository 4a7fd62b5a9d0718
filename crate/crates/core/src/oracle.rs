//! Floating-point oracle: a cyclic Jacobi eigensolver run on the Gram matrix
//! `AᵀA`, whose eigenvalues are the squared singular values of `A`.
//!
//! Nothing here uses a closed form for the norm. The exact `s²` only enters
//! [`spectrum_check`] as the value being tested.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::diffmatrix::{build, DifferenceMatrix};
use crate::error::{Error, Result};
use crate::sequences::IntegerSequence;
use crate::spectral::pairwise_square_sum_bruteforce;

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_SWEEPS: usize = 100;

/// Entries above this magnitude cannot be converted to `f64` exactly.
pub const MAX_EXACT_ENTRY: u64 = 1 << 52;

/// Dense symmetric matrix of doubles, with the factor the source entries were divided by.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSymMatrix {
    n: usize,
    data: Vec<f64>,
    scale: f64,
}

impl DenseSymMatrix {
    /// Builds from the upper triangle of `f(i, j)`; the lower triangle is mirrored.
    pub fn from_upper(n: usize, scale: f64, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                data[i * n + j] = v;
                data[j * n + i] = v;
            }
        }
        Self { n, data, scale }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Symmetric permutation `P S Pᵀ`, where `perm[i]` is the source row of row `i`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self::from_upper(self.n, self.scale, |i, j| self.get(perm[i], perm[j]))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenResult {
    /// Sorted descending.
    pub eigenvalues: Vec<f64>,
    pub sweeps_used: usize,
    /// Frobenius norm of the off-diagonal part at termination.
    pub off_diag_residual: f64,
}

/// `(A/scale)ᵀ(A/scale)` with `scale = max(1, max|a_ij|)`.
pub fn gram(m: &DifferenceMatrix) -> Result<DenseSymMatrix> {
    let a = m.as_matrix();
    let n = a.dim();
    let max_abs = a.max_abs();
    if max_abs > BigInt::from(MAX_EXACT_ENTRY) {
        return Err(Error::Precision(format!(
            "largest difference {max_abs} exceeds 2^52 and cannot be represented exactly"
        )));
    }
    // every entry is now an exactly representable integer
    let scale = max_abs.to_f64().expect("bounded").max(1.0);
    let b: Vec<f64> = a.rows().flatten().map(|v| v.to_f64().expect("bounded") / scale).collect();
    Ok(DenseSymMatrix::from_upper(n, scale, |i, j| (0..n).map(|k| b[k * n + i] * b[k * n + j]).sum()))
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[i * n + j] * a[i * n + j];
            }
        }
    }
    sum.sqrt()
}

/// Cyclic-by-row Jacobi rotations until the off-diagonal norm drops to `tol · ‖S‖_F`.
pub fn jacobi_eigen(s: &DenseSymMatrix, tol: f64, max_sweeps: usize) -> Result<EigenResult> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Precision(format!("tolerance must be positive, got {tol}")));
    }
    let n = s.n;
    let mut a = s.data.clone();
    let target = tol * s.frobenius();

    let mut sweep = 0;
    loop {
        let off = off_diagonal_norm(&a, n);
        if off <= target {
            let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
            eigenvalues.sort_by(|x, y| y.total_cmp(x));
            return Ok(EigenResult { eigenvalues, sweeps_used: sweep, off_diag_residual: off });
        }
        if sweep == max_sweeps {
            return Err(Error::Convergence { sweeps: sweep, residual: off });
        }
        sweep += 1;

        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let (app, aqq) = (a[p * n + p], a[q * n + q]);
                // negligible against both diagonal entries: drop it
                if sweep > 4 && app.abs() + 100.0 * apq.abs() == app.abs() && aqq.abs() + 100.0 * apq.abs() == aqq.abs() {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let sn = t * c;

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    let new_kp = c * akp - sn * akq;
                    let new_kq = sn * akp + c * akq;
                    a[k * n + p] = new_kp;
                    a[p * n + k] = new_kp;
                    a[k * n + q] = new_kq;
                    a[q * n + k] = new_kq;
                }
            }
        }
    }
}

/// Largest singular value of `A`, from the Gram matrix eigenvalues.
pub fn numeric_spectral_norm(m: &DifferenceMatrix) -> Result<f64> {
    let g = gram(m)?;
    let eig = jacobi_eigen(&g, DEFAULT_TOL, DEFAULT_MAX_SWEEPS)?;
    let top = eig.eigenvalues.first().copied().unwrap_or(0.0).max(0.0);
    Ok(g.scale * top.sqrt())
}

/// Checks that the Gram spectrum is `{s², s², 0, …, 0}` within `tol · max(1, s²)`.
pub fn spectrum_check(seq: &IntegerSequence, tol: f64) -> Result<bool> {
    let n = seq.len();
    if n < 2 {
        return Err(Error::Dimension("spectrum check needs n >= 2".into()));
    }
    let s_squared = pairwise_square_sum_bruteforce(seq);
    let s2 = s_squared.abs().to_f64().unwrap_or(f64::INFINITY);
    let g = gram(&build(seq))?;
    let eig = jacobi_eigen(&g, DEFAULT_TOL, DEFAULT_MAX_SWEEPS)?;
    let scale2 = g.scale * g.scale;
    let bound = tol * s2.max(1.0);
    Ok(eig.eigenvalues.iter().enumerate().all(|(i, &lambda)| {
        let expected = if i < 2 { s2 } else { 0.0 };
        (lambda * scale2 - expected).abs() <= bound
    }))
}
