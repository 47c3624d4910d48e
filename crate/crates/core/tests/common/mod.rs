//! Oracles shared by the integration test targets.

#![allow(dead_code)]

use nalgebra::{Complex, DMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use klab_core::algebra::{Poly, Ring, Scalar, Symbolic, ZetaRhoPoly};
use klab_core::criteria::n7::{RHO, ZETA};
use klab_core::curve::{hermitian_part_eigs, hermitian_part_offdiag};
use klab_core::kippenhahn::KippenhahnPoly;
use klab_core::reciprocal::{matrix_from_xi, squared_focus, ReciprocalMatrix, XiVector};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational(r: &mut ChaCha8Rng) -> Scalar {
    Scalar::ratio(r.random_range(-20..=20), r.random_range(1..=9))
}

/// Real entries uniform in `[0, 5)`.
pub fn random_xi(r: &mut ChaCha8Rng, n: usize) -> XiVector {
    let xi = (0..n - 1)
        .map(|_| Scalar::real(r.random_range(0.0..5.0)))
        .collect();
    XiVector::new(n, xi).unwrap()
}

/// Integer entries in `0..=3`, a grid rich in elliptical cases.
pub fn random_small_xi(r: &mut ChaCha8Rng) -> Vec<i64> {
    (0..6).map(|_| r.random_range(0..=3)).collect()
}

/// Laplace expansion along the first row.
pub fn laplace(m: &[Vec<Poly<Scalar>>]) -> Poly<Scalar> {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = Poly::zero();
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly<Scalar>>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = entry.clone() * laplace(&minor);
        det = if j % 2 == 0 { det + term } else { det - term };
    }
    det
}

/// Determinant of the tridiagonal matrix with diagonal `a`, superdiagonal 1 and
/// subdiagonal `η`, as a polynomial in `a`.
pub fn brute_force_tridiagonal(eta: &[Scalar]) -> Poly<Scalar> {
    let n = eta.len() + 1;
    let a = Poly::<Scalar>::x();
    let mut m = vec![vec![Poly::zero(); n]; n];
    for i in 0..n {
        m[i][i] = a.clone();
        if i + 1 < n {
            m[i][i + 1] = Poly::one();
            m[i + 1][i] = Poly::constant(eta[i].clone());
        }
    }
    laplace(&m)
}

pub fn dense_hermitian_part(a: &ReciprocalMatrix, theta: f64) -> DMatrix<Complex<f64>> {
    let n = a.n();
    let b = hermitian_part_offdiag(a, theta);
    DMatrix::from_fn(n, n, |i, j| {
        if j == i + 1 {
            b[i]
        } else if i == j + 1 {
            b[j].conj()
        } else {
            Complex::new(0.0, 0.0)
        }
    })
}

/// Coefficients of `∏(μ_i − λ)` in increasing powers of `λ`.
pub fn char_poly_from_roots(roots: &[f64]) -> Vec<f64> {
    let mut c = vec![1.0];
    for &mu in roots {
        let mut next = vec![0.0; c.len() + 1];
        for (k, v) in c.iter().enumerate() {
            next[k] += mu * v;
            next[k + 1] -= v;
        }
        c = next;
    }
    c
}

/// `(−λ)^{n mod 2}·P_n(λ², ρ)` expanded in increasing powers of `λ`.
pub fn expand_in_lambda(p: &KippenhahnPoly, rho: f64) -> Vec<f64> {
    let n = p.n;
    let mut out = vec![0.0; n + 1];
    for j in 0..=p.m() {
        let cj = p.coeff(j).eval(&Scalar::real(rho)).to_f64();
        out[2 * j + n % 2] = if n % 2 == 1 { -cj } else { cj };
    }
    out
}

/// Largest coefficient deviation between the symbolic and the numeric characteristic
/// polynomial, relative to the largest numeric coefficient.
pub fn determinant_mismatch(xi: &XiVector, theta: f64) -> f64 {
    let a = matrix_from_xi(xi, None).unwrap();
    let eig = dense_hermitian_part(&a, theta).symmetric_eigenvalues();
    let numeric = char_poly_from_roots(eig.as_slice());
    let symbolic = expand_in_lambda(
        &klab_core::kippenhahn::kippenhahn_poly(xi),
        theta.cos().powi(2),
    );
    let scale = numeric.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    symbolic
        .iter()
        .zip(&numeric)
        .map(|(s, d)| (s - d).abs() / scale)
        .fold(0.0, f64::max)
}

/// Whether `ζ − (C + ρX_k²)` divides `P_n` for some `C ≥ 0`, tested numerically.
///
/// The ellipse meets `θ = π/2` at `ζ = C`, so the candidates are the squared
/// eigenvalues of the Hermitian part there.
pub fn numerically_divisible(xi: &XiVector, p: &KippenhahnPoly, k: usize) -> bool {
    let a = matrix_from_xi(xi, None).unwrap();
    let mut cands: Vec<f64> = hermitian_part_eigs(&a, std::f64::consts::FRAC_PI_2)
        .values
        .iter()
        .filter(|l| **l > 1e-9)
        .map(|l| l * l)
        .collect();
    cands.push(0.0);
    let x2 = squared_focus(xi.n(), k).to_f64();
    cands.iter().any(|&c| {
        (0..6).all(|i| {
            let rho = i as f64 / 5.0;
            let v = p
                .eval(&Scalar::real(c + rho * x2), &Scalar::real(rho))
                .to_f64();
            v.abs() < 1e-7 * (1.0 + c.powi(3))
        })
    })
}

/// `Σ p_{j,i} ζ^j ρ^i` as one multivariate polynomial.
pub fn flatten(p: &ZetaRhoPoly<Symbolic>) -> Symbolic {
    let mut out = Symbolic::zero();
    for (j, pj) in p.coeffs().iter().enumerate() {
        for (i, c) in pj.coeffs().iter().enumerate() {
            out = out
                + c.clone() * Symbolic::var(ZETA).pow(j as u32) * Symbolic::var(RHO).pow(i as u32);
        }
    }
    out
}

/// `a = t·b` for a constant `t`, returned when it exists.
pub fn ratio(a: &Symbolic, b: &Symbolic) -> Option<Scalar> {
    let (m, cb) = b.terms().next()?;
    let ca = a.terms().find(|(ma, _)| *ma == m).map(|(_, c)| c.clone())?;
    let t = ca.checked_div(cb).ok()?;
    (a.clone() == b.clone() * Symbolic::constant(t.clone())).then_some(t)
}
