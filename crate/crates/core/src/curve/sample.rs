//! Envelope sampling: each eigenpair of `Re(e^{iθ}A)` gives the tangency point
//! `z = e^{−iθ}(λ − iλ′)` on its support line.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::reciprocal::ReciprocalMatrix;

use super::eig::eigen_decomposition;
use super::CurveError;

/// Eigenvalues closer than this are treated as a crossing.
pub const GAP_TOL: f64 = 1e-10;

/// Sorted eigenpairs of the Hermitian part `Re(e^{iθ}A)`.
#[derive(Clone, Debug)]
pub struct HermitianEigs {
    pub theta: f64,
    /// Decreasing.
    pub values: Vec<f64>,
    /// Unit eigenvectors, one per value.
    pub vectors: Vec<Vec<Complex64>>,
}

impl HermitianEigs {
    /// Distance from eigenvalue `j` (0-based) to its nearest neighbour.
    pub fn gap(&self, j: usize) -> f64 {
        let v = &self.values;
        let below = if j + 1 < v.len() {
            v[j] - v[j + 1]
        } else {
            f64::INFINITY
        };
        let above = if j > 0 {
            v[j - 1] - v[j]
        } else {
            f64::INFINITY
        };
        below.min(above)
    }
}

/// One tangency point of the envelope.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurveSample {
    pub theta: f64,
    /// 1-based index into the decreasing eigenvalues.
    pub branch: usize,
    pub z: Complex64,
    pub lambda: f64,
    pub lambda_prime: f64,
    /// False when the eigenvalue is within [`GAP_TOL`] of another one.
    pub reliable: bool,
}

/// Superdiagonal entries of `Re(e^{iθ}A)`.
pub fn hermitian_part_offdiag(a: &ReciprocalMatrix, theta: f64) -> Vec<Complex64> {
    let w = Complex64::from_polar(1.0, theta);
    a.upper()
        .iter()
        .zip(a.lower())
        .map(|(u, l)| 0.5 * (w * u + w.conj() * l.conj()))
        .collect()
}

/// Superdiagonal entries of `d/dθ Re(e^{iθ}A) = Re(ie^{iθ}A)`.
fn derivative_offdiag(a: &ReciprocalMatrix, theta: f64) -> Vec<Complex64> {
    let w = Complex64::from_polar(1.0, theta) * Complex64::i();
    a.upper()
        .iter()
        .zip(a.lower())
        .map(|(u, l)| 0.5 * (w * u + w.conj() * l.conj()))
        .collect()
}

/// A diagonal unitary `D` turns the Hermitian tridiagonal matrix into the real
/// symmetric one with off-diagonal `|b_j|`; eigenvectors map back through `D`.
pub fn hermitian_part_eigs(a: &ReciprocalMatrix, theta: f64) -> HermitianEigs {
    let b = hermitian_part_offdiag(a, theta);
    let n = a.n();
    let mut phase = vec![Complex64::new(1.0, 0.0); n];
    for j in 0..n - 1 {
        let r = b[j].norm();
        phase[j + 1] = if r > 0.0 {
            phase[j] * b[j].conj() / r
        } else {
            phase[j]
        };
    }
    let off: Vec<f64> = b.iter().map(|z| z.norm()).collect();
    let (values, real_vectors) = eigen_decomposition(&vec![0.0; n], &off);
    let vectors = real_vectors
        .into_iter()
        .map(|w| w.iter().zip(&phase).map(|(x, d)| d * x).collect())
        .collect();
    HermitianEigs {
        theta,
        values,
        vectors,
    }
}

/// `λ′ = ⟨Re(ie^{iθ}A)v, v⟩` for a unit eigenvector `v`.
fn lambda_derivative(c: &[Complex64], v: &[Complex64]) -> f64 {
    c.iter()
        .enumerate()
        .map(|(j, cj)| 2.0 * (v[j].conj() * cj * v[j + 1]).re)
        .sum()
}

/// All `n` tangency points at a single `θ`.
pub fn sample_at(a: &ReciprocalMatrix, theta: f64) -> Vec<CurveSample> {
    let eigs = hermitian_part_eigs(a, theta);
    let c = derivative_offdiag(a, theta);
    let turn = Complex64::from_polar(1.0, -theta);
    eigs.values
        .iter()
        .zip(&eigs.vectors)
        .enumerate()
        .map(|(j, (&lambda, v))| {
            let lambda_prime = lambda_derivative(&c, v);
            CurveSample {
                theta,
                branch: j + 1,
                z: turn * Complex64::new(lambda, -lambda_prime),
                lambda,
                lambda_prime,
                reliable: eigs.gap(j) >= GAP_TOL,
            }
        })
        .collect()
}

/// Samples every branch on every grid angle, ordered by grid position then branch.
pub fn sample_curve(a: &ReciprocalMatrix, grid: &[f64]) -> Result<Vec<CurveSample>, CurveError> {
    if grid.is_empty() {
        return Err(CurveError::EmptyGrid);
    }
    let per_theta: Vec<Vec<CurveSample>> = grid.par_iter().map(|&t| sample_at(a, t)).collect();
    Ok(per_theta.into_iter().flatten().collect())
}

/// `N` uniform angles `θ_k = −π + 2πk/N`, `k = 1..N`, covering `(−π, π]`.
///
/// For even `N` the grid is closed under `θ ↦ −θ` and `θ ↦ θ + π`.
pub fn default_grid(n: usize) -> Vec<f64> {
    use std::f64::consts::PI;
    (1..=n)
        .map(|k| -PI + 2.0 * PI * k as f64 / n as f64)
        .collect()
}
