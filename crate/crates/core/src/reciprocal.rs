//! Reciprocal tridiagonal matrices, their ξ-invariants and their common spectrum.
//!
//! A reciprocal matrix has zero diagonal and `a_{j,j+1}·a_{j+1,j} = 1`. Its
//! numerical-range geometry depends only on `ξ_j = (|a_{j,j+1}| − |a_{j+1,j}|)²/4`,
//! and every such matrix of size `n` has eigenvalues `2cos(kπ/(n+1))`.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::algebra::{int, parse_expr, rat, AlgebraError, Poly, QCosPi8, QSqrt2, Ring, Scalar};

/// Tolerance on `|a_{j,j+1}·a_{j+1,j} − 1|` and on phase moduli.
pub const RECIPROCITY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ReciprocalError {
    #[error("matrix size must be at least 2, got {0}")]
    TooSmall(usize),
    #[error("expected {expected} ξ entries for n = {n}, got {got}")]
    Dimension {
        n: usize,
        expected: usize,
        got: usize,
    },
    #[error("ξ_{index} = {value} is negative")]
    NegativeXi { index: usize, value: String },
    #[error("entry {index}: a(j,j+1)·a(j+1,j) = {product} is not 1")]
    Reciprocity { index: usize, product: String },
    #[error("phase {index} does not have unit modulus")]
    BadPhase { index: usize },
    #[error("decimal entry '{0}' is not allowed in exact mode")]
    InexactEntry(String),
    #[error("invalid ξ entry '{token}': {source}")]
    Entry {
        token: String,
        #[source]
        source: AlgebraError,
    },
    #[error("malformed JSON input: {0}")]
    Json(String),
}

/// The `n − 1` invariants `ξ_1..ξ_{n−1}` of a reciprocal matrix.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct XiVector {
    n: usize,
    xi: Vec<Scalar>,
}

impl XiVector {
    /// Validated constructor: `n ≥ 2`, `n − 1` entries, all nonnegative.
    pub fn new(n: usize, xi: Vec<Scalar>) -> Result<Self, ReciprocalError> {
        let v = XiVector::new_signed(n, xi)?;
        if let Some((i, x)) = v.xi.iter().enumerate().find(|(_, x)| x.signum() < 0) {
            return Err(ReciprocalError::NegativeXi {
                index: i + 1,
                value: x.to_string(),
            });
        }
        Ok(v)
    }

    /// Like [`XiVector::new`] but admits negative entries.
    ///
    /// Such tuples are not realised by any matrix; they are kept for checking
    /// polynomial identities on catalogued solutions with a negative component.
    pub fn new_signed(n: usize, xi: Vec<Scalar>) -> Result<Self, ReciprocalError> {
        if n < 2 {
            return Err(ReciprocalError::TooSmall(n));
        }
        if xi.len() != n - 1 {
            return Err(ReciprocalError::Dimension {
                n,
                expected: n - 1,
                got: xi.len(),
            });
        }
        Ok(XiVector { n, xi })
    }

    pub fn from_ints(vals: &[i64]) -> Result<Self, ReciprocalError> {
        XiVector::new(
            vals.len() + 1,
            vals.iter().map(|&v| Scalar::int(v)).collect(),
        )
    }

    /// Parses a comma-separated list of entries such as `1, 3/4, 1+2*sqrt2, 0.5`.
    ///
    /// With `exact` set, decimal entries are rejected.
    pub fn parse(list: &str, n: Option<usize>, exact: bool) -> Result<Self, ReciprocalError> {
        let tokens: Vec<&str> = list
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .collect();
        let xi = tokens
            .iter()
            .map(|t| parse_entry(t, exact))
            .collect::<Result<Vec<_>, _>>()?;
        XiVector::new(n.unwrap_or(xi.len() + 1), xi)
    }

    /// Reads `{"n": 7, "xi": [1, "3/4", "1+sqrt2"]}`.
    pub fn from_json(text: &str, exact: bool) -> Result<Self, ReciprocalError> {
        let v: Value =
            serde_json::from_str(text).map_err(|e| ReciprocalError::Json(e.to_string()))?;
        let entries = v
            .get("xi")
            .and_then(Value::as_array)
            .ok_or_else(|| ReciprocalError::Json("missing array field \"xi\"".into()))?;
        let xi = entries
            .iter()
            .map(|e| match e {
                Value::String(s) => parse_entry(s, exact),
                Value::Number(num) => parse_entry(&num.to_string(), exact),
                other => Err(ReciprocalError::Json(format!("unsupported entry {other}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let n = match v.get("n") {
            Some(n) => n
                .as_u64()
                .ok_or_else(|| ReciprocalError::Json("\"n\" must be a positive integer".into()))?
                as usize,
            None => xi.len() + 1,
        };
        XiVector::new(n, xi)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `m = ⌊n/2⌋`, the ζ-degree of the Kippenhahn polynomial.
    pub fn m(&self) -> usize {
        self.n / 2
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.xi
    }

    /// `ξ_j` with 1-based index.
    pub fn get(&self, j: usize) -> &Scalar {
        &self.xi[j - 1]
    }

    pub fn is_exact(&self) -> bool {
        self.xi.iter().all(Scalar::is_exact)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.xi.iter().map(Scalar::to_f64).collect()
    }

    /// The same tuple with every entry converted to a double.
    pub fn to_real(&self) -> XiVector {
        XiVector {
            n: self.n,
            xi: self.xi.iter().map(Scalar::to_real).collect(),
        }
    }

    pub fn sup_norm(&self) -> f64 {
        self.xi.iter().map(|x| x.to_f64().abs()).fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.xi.iter().all(Ring::is_zero)
    }

    pub fn scaled(&self, t: &Scalar) -> XiVector {
        XiVector {
            n: self.n,
            xi: self.xi.iter().map(|x| x.clone() * t.clone()).collect(),
        }
    }

    /// `ξ_j ↦ ξ_{n−j}`, the invariants of the transposed-similar matrix.
    pub fn transposed(&self) -> XiVector {
        XiVector {
            n: self.n,
            xi: self.xi.iter().rev().cloned().collect(),
        }
    }
}

fn parse_entry(token: &str, exact: bool) -> Result<Scalar, ReciprocalError> {
    let wrap = |source| ReciprocalError::Entry {
        token: token.to_string(),
        source,
    };
    let expr = parse_expr(token).map_err(wrap)?;
    if exact && expr.has_real_literal() {
        return Err(ReciprocalError::InexactEntry(token.to_string()));
    }
    expr.eval_scalar().map_err(wrap)
}

/// Moduli `x = |a_{j,j+1}|`, `y = |a_{j+1,j}|` of one reciprocal pair.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModulusPair {
    pub x: f64,
    pub y: f64,
}

impl ModulusPair {
    /// The pair with `x ≥ y` realising a given `ξ ≥ 0`.
    pub fn from_xi(xi: f64) -> Self {
        let x = xi.sqrt() + (xi + 1.0).sqrt();
        ModulusPair { x, y: 1.0 / x }
    }

    pub fn xi(&self) -> f64 {
        let d = self.x - self.y;
        d * d / 4.0
    }

    /// `A = (x² + y²)/2`, which equals `2ξ + 1` when `xy = 1`.
    pub fn mean_square(&self) -> f64 {
        (self.x * self.x + self.y * self.y) / 2.0
    }
}

/// A reciprocal tridiagonal matrix with zero diagonal.
#[derive(Clone, Debug)]
pub struct ReciprocalMatrix {
    upper: Vec<Complex64>,
    lower: Vec<Complex64>,
    /// Exact invariants the matrix was built from, returned verbatim by [`xi_from_matrix`].
    source_xi: Option<XiVector>,
}

impl ReciprocalMatrix {
    /// Builds from super- and subdiagonal entries, checking reciprocity.
    pub fn from_parts(
        upper: Vec<Complex64>,
        lower: Vec<Complex64>,
    ) -> Result<Self, ReciprocalError> {
        if upper.is_empty() {
            return Err(ReciprocalError::TooSmall(upper.len() + 1));
        }
        if upper.len() != lower.len() {
            return Err(ReciprocalError::Dimension {
                n: upper.len() + 1,
                expected: upper.len(),
                got: lower.len(),
            });
        }
        for (i, (u, l)) in upper.iter().zip(&lower).enumerate() {
            let prod = u * l;
            if (prod - 1.0).norm() > RECIPROCITY_TOL {
                return Err(ReciprocalError::Reciprocity {
                    index: i + 1,
                    product: format!("{prod}"),
                });
            }
        }
        Ok(ReciprocalMatrix {
            upper,
            lower,
            source_xi: None,
        })
    }

    pub fn n(&self) -> usize {
        self.upper.len() + 1
    }

    /// `a_{j,j+1}` for `j = 1..n−1`.
    pub fn upper(&self) -> &[Complex64] {
        &self.upper
    }

    /// `a_{j+1,j}` for `j = 1..n−1`.
    pub fn lower(&self) -> &[Complex64] {
        &self.lower
    }

    pub fn to_dense(&self) -> Vec<Vec<Complex64>> {
        let n = self.n();
        let mut a = vec![vec![Complex64::new(0.0, 0.0); n]; n];
        for j in 0..n - 1 {
            a[j][j + 1] = self.upper[j];
            a[j + 1][j] = self.lower[j];
        }
        a
    }
}

/// Realises `ξ` as a matrix with `|a_{j,j+1}| = √ξ_j + √(ξ_j + 1)`.
///
/// Default phases are all 1, giving the real representative.
pub fn matrix_from_xi(
    xi: &XiVector,
    phases: Option<&[Complex64]>,
) -> Result<ReciprocalMatrix, ReciprocalError> {
    let k = xi.n() - 1;
    if let Some((i, x)) = xi
        .entries()
        .iter()
        .enumerate()
        .find(|(_, x)| x.signum() < 0)
    {
        return Err(ReciprocalError::NegativeXi {
            index: i + 1,
            value: x.to_string(),
        });
    }
    if let Some(ph) = phases {
        if ph.len() != k {
            return Err(ReciprocalError::Dimension {
                n: xi.n(),
                expected: k,
                got: ph.len(),
            });
        }
        if let Some(i) = ph
            .iter()
            .position(|z| (z.norm() - 1.0).abs() > RECIPROCITY_TOL)
        {
            return Err(ReciprocalError::BadPhase { index: i + 1 });
        }
    }
    let mut upper = Vec::with_capacity(k);
    let mut lower = Vec::with_capacity(k);
    for (j, x) in xi.entries().iter().enumerate() {
        let pair = ModulusPair::from_xi(x.to_f64());
        let phase = phases.map_or(Complex64::new(1.0, 0.0), |ph| ph[j]);
        upper.push(phase * pair.x);
        lower.push(phase.conj() * pair.y);
    }
    let mut a = ReciprocalMatrix::from_parts(upper, lower)?;
    a.source_xi = Some(xi.clone());
    Ok(a)
}

/// Recovers `ξ_j = (|a_{j,j+1}| − |a_{j+1,j}|)²/4`.
///
/// Matrices built by [`matrix_from_xi`] return their exact source tuple when it
/// agrees with the moduli; otherwise the entries are computed in floating point.
pub fn xi_from_matrix(a: &ReciprocalMatrix) -> Result<XiVector, ReciprocalError> {
    for (i, (u, l)) in a.upper.iter().zip(&a.lower).enumerate() {
        let prod = u * l;
        if (prod - 1.0).norm() > RECIPROCITY_TOL {
            return Err(ReciprocalError::Reciprocity {
                index: i + 1,
                product: format!("{prod}"),
            });
        }
    }
    let numeric: Vec<f64> = a
        .upper
        .iter()
        .zip(&a.lower)
        .map(|(u, l)| {
            let pair = ModulusPair {
                x: u.norm(),
                y: l.norm(),
            };
            pair.xi()
        })
        .collect();
    if let Some(src) = &a.source_xi {
        let agrees = src
            .entries()
            .iter()
            .zip(&numeric)
            .all(|(s, v)| (s.to_f64() - v).abs() <= 1e-9 * (1.0 + v.abs()));
        if agrees {
            return Ok(src.clone());
        }
    }
    XiVector::new(a.n(), numeric.into_iter().map(Scalar::Real).collect())
}

/// `cos(aπ/b)` when it lies in the supported exact fields.
fn exact_cos_pi(a: i64, b: i64) -> Option<Scalar> {
    let g = num_integer::gcd(a, b);
    let (mut a, b) = (a / g, b / g);
    a = a.rem_euclid(2 * b);
    if a > b {
        a = 2 * b - a;
    }
    // Now the angle is in [0, π]; fold [π/2, π] onto [0, π/2] with a sign flip.
    let (a, sign) = if 2 * a > b { (b - a, -1) } else { (a, 1) };
    let g = num_integer::gcd(a, b).max(1);
    let half = Scalar::ratio(1, 2);
    let u = || Scalar::CosPi8(QCosPi8::u());
    let v = match (a / g, b / g) {
        (0, _) => Scalar::int(1),
        (1, 2) => Scalar::int(0),
        (1, 3) => half,
        (1, 4) => Scalar::Sqrt2(QSqrt2::new(int(0), rat(1, 2))),
        (1, 8) => u() * half,
        (3, 8) => u() * Scalar::sqrt2(-1, 1) * half,
        _ => return None,
    };
    Some(if sign < 0 { -v } else { v })
}

/// Exact `X_k² = 4cos²(kπ/(n+1))` where available.
pub fn exact_squared_focus(n: usize, k: usize) -> Option<Scalar> {
    let c = exact_cos_pi(2 * k as i64, n as i64 + 1)?;
    Some(Scalar::int(2) + Scalar::int(2) * c)
}

/// `X_k = 2cos(kπ/(n+1))`, exact where available and real otherwise.
pub fn focus(n: usize, k: usize) -> Scalar {
    exact_cos_pi(k as i64, n as i64 + 1)
        .map(|c| Scalar::int(2) * c)
        .unwrap_or_else(|| Scalar::Real(2.0 * (k as f64 * PI / (n as f64 + 1.0)).cos()))
}

/// `X_k²`, exact where available and real otherwise.
pub fn squared_focus(n: usize, k: usize) -> Scalar {
    exact_squared_focus(n, k).unwrap_or_else(|| {
        let v = 2.0 * (k as f64 * PI / (n as f64 + 1.0)).cos();
        Scalar::Real(v * v)
    })
}

/// The eigenvalues `2cos(kπ/(n+1))`, `k = 1..n`, shared by every reciprocal matrix of size `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumList {
    pub n: usize,
    /// Strictly decreasing.
    pub values: Vec<f64>,
    /// Exact squares `X_k²` where the supported fields contain them.
    pub exact_squares: Vec<Option<Scalar>>,
}

pub fn spectrum(n: usize) -> SpectrumList {
    let values = (1..=n)
        .map(|k| 2.0 * (k as f64 * PI / (n as f64 + 1.0)).cos())
        .collect();
    let exact_squares = (1..=n).map(|k| exact_squared_focus(n, k)).collect();
    SpectrumList {
        n,
        values,
        exact_squares,
    }
}

impl SpectrumList {
    /// The positive eigenvalues `X_1 > … > X_m`.
    pub fn positive(&self) -> &[f64] {
        &self.values[..self.n / 2]
    }
}

/// `Q_n(ζ) = Σ_j (−1)^j C(n−j, j) ζ^{m−j}`, the characteristic polynomial in `ζ = λ²`
/// with the factor `λ` removed for odd `n`.
pub fn char_poly_qn(n: usize) -> Poly<Scalar> {
    let m = n / 2;
    let mut coeffs = vec![Scalar::int(0); m + 1];
    for j in 0..=m {
        let b: BigInt = num_integer::binomial(BigInt::from(n - j), BigInt::from(j));
        let c = Scalar::Rational(b.into());
        coeffs[m - j] = if j % 2 == 1 { -c } else { c };
    }
    Poly::new(coeffs)
}
