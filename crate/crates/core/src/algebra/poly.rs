//! Dense univariate polynomials over any [`Ring`].
//!
//! Nesting gives the bivariate ring: a [`ZetaRhoPoly`] is a polynomial in `ζ`
//! whose coefficients are polynomials in `ρ`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ring::{Ring, ScalarRing};
use super::{AlgebraError, MultiPoly, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

/// Polynomial in `ρ = cos²θ`.
pub type RhoPoly<R = Scalar> = Poly<R>;

/// Polynomial in `ζ = λ²` with [`RhoPoly`] coefficients.
pub type ZetaRhoPoly<R = Scalar> = Poly<Poly<R>>;

impl<R: Ring> Poly<R> {
    /// Builds from coefficients `c₀, c₁, …`, dropping trailing zeros.
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: R) -> Self {
        Poly::new(vec![c])
    }

    /// `c·x^deg`.
    pub fn monomial(c: R, deg: usize) -> Self {
        let mut coeffs = vec![R::zero(); deg];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    /// The variable itself.
    pub fn x() -> Self {
        Poly::monomial(R::one(), 1)
    }

    /// `a + b·x`.
    pub fn linear(a: R, b: R) -> Self {
        Poly::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn leading(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// `self(inner(x))` by Horner's scheme.
    pub fn compose(&self, inner: &Poly<R>) -> Poly<R> {
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| {
            acc * inner.clone() + Poly::constant(c.clone())
        })
    }

    pub fn scale(&self, s: &R) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * R::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Division by a divisor monic in the main variable.
    ///
    /// Every step cancels the leading term structurally, so the remainder
    /// degree bound holds even when coefficient arithmetic is inexact.
    pub fn divrem_monic(&self, den: &Poly<R>) -> Result<(Poly<R>, Poly<R>), AlgebraError> {
        if !den.is_monic() {
            return Err(AlgebraError::NonMonicDivisor);
        }
        let dd = den.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![R::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let q = rem[i].clone();
            rem[i] = R::zero();
            if q.is_zero() {
                continue;
            }
            for j in 0..dd {
                let k = i - dd + j;
                rem[k] = rem[k].clone() - q.clone() * den.coeffs[j].clone();
            }
            quot[i - dd] = q;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }
}

impl<R: ScalarRing> Poly<R> {
    /// Multiplies every coefficient by a scalar constant.
    pub fn scale_scalar(&self, s: &Scalar) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.scale(s)).collect())
    }
}

impl<R: Ring> Default for Poly<R> {
    fn default() -> Self {
        Poly::zero()
    }
}

impl<R: Ring> Add for Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: Poly<R>) -> Poly<R> {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (i, c) in short.into_iter().enumerate() {
            long[i] = long[i].clone() + c;
        }
        Poly::new(long)
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<R: Ring> Sub for Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: Poly<R>) -> Poly<R> {
        self + (-rhs)
    }
}

impl<R: Ring> Mul for Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: Poly<R>) -> Poly<R> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn from_i64(v: i64) -> Self {
        Poly::constant(R::from_i64(v))
    }
}

impl<R: ScalarRing> ScalarRing for Poly<R> {
    fn from_scalar(s: &Scalar) -> Self {
        Poly::constant(R::from_scalar(s))
    }
    fn to_scalar(&self) -> Option<Scalar> {
        match self.coeffs.len() {
            0 => Some(Scalar::int(0)),
            1 => self.coeffs[0].to_scalar(),
            _ => None,
        }
    }
    fn scale(&self, s: &Scalar) -> Self {
        self.scale_scalar(s)
    }
}

/// Largest coefficient magnitude, used for relative zero tests in real mode.
pub trait CoeffNorm {
    fn max_abs(&self) -> f64;
}

impl CoeffNorm for Scalar {
    fn max_abs(&self) -> f64 {
        self.to_f64().abs()
    }
}

impl<R: CoeffNorm> CoeffNorm for Poly<R> {
    fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.max_abs()).fold(0.0, f64::max)
    }
}

impl CoeffNorm for MultiPoly<Scalar> {
    fn max_abs(&self) -> f64 {
        self.terms()
            .map(|(_, c)| c.to_f64().abs())
            .fold(0.0, f64::max)
    }
}

impl<R: Ring + fmt::Display> Poly<R> {
    /// Human-readable form in the named variable.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({c})"),
                1 => format!("({c})*{var}"),
                _ => format!("({c})*{var}^{i}"),
            })
            .collect();
        terms.join(" + ")
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("x"))
    }
}
