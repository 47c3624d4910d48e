//! The coefficient domain: exact rationals, exact algebraic numbers, or doubles.
//!
//! Mixed arithmetic promotes along `Rational → Sqrt2 → CosPi8 → Real` and never
//! demotes, so a result is exact exactly when every operand was.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use super::quadratic::{QCosPi8, QSqrt2};
use super::rational::{format_rational, int, rat, rational_sqrt, to_f64, Rational};
use super::ring::{Field, Ring, ScalarRing};
use super::AlgebraError;

#[derive(Clone, Debug)]
pub enum Scalar {
    Rational(Rational),
    Sqrt2(QSqrt2),
    CosPi8(QCosPi8),
    Real(f64),
}

impl Scalar {
    pub fn int(v: i64) -> Self {
        Scalar::Rational(int(v))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::Rational(rat(num, den))
    }

    /// `a + b·√2` with integer coefficients.
    pub fn sqrt2(a: i64, b: i64) -> Self {
        Scalar::Sqrt2(QSqrt2::from_ints(a, b))
    }

    pub fn real(v: f64) -> Self {
        Scalar::Real(v)
    }

    fn level(&self) -> u8 {
        match self {
            Scalar::Rational(_) => 0,
            Scalar::Sqrt2(_) => 1,
            Scalar::CosPi8(_) => 2,
            Scalar::Real(_) => 3,
        }
    }

    fn promote(&self, level: u8) -> Scalar {
        if self.level() >= level {
            return self.clone();
        }
        match (self, level) {
            (_, 3) => Scalar::Real(self.to_f64()),
            (Scalar::Rational(q), 1) => Scalar::Sqrt2(QSqrt2::from_rational(q.clone())),
            (Scalar::Rational(q), 2) => {
                Scalar::CosPi8(QCosPi8::from_sqrt2(QSqrt2::from_rational(q.clone())))
            }
            (Scalar::Sqrt2(q), 2) => Scalar::CosPi8(QCosPi8::from_sqrt2(q.clone())),
            _ => unreachable!("promotion only moves up the lattice"),
        }
    }

    fn unify(a: &Scalar, b: &Scalar) -> (Scalar, Scalar) {
        let level = a.level().max(b.level());
        (a.promote(level), b.promote(level))
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Scalar::Real(_))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Rational(q) => to_f64(q),
            Scalar::Sqrt2(q) => q.to_f64(),
            Scalar::CosPi8(q) => q.to_f64(),
            Scalar::Real(v) => *v,
        }
    }

    pub fn to_real(&self) -> Scalar {
        Scalar::Real(self.to_f64())
    }

    /// Sign as -1, 0 or 1; exact for the exact variants.
    pub fn signum(&self) -> i32 {
        match self {
            Scalar::Rational(q) => {
                if q.is_zero() {
                    0
                } else if q.is_positive() {
                    1
                } else {
                    -1
                }
            }
            Scalar::Sqrt2(q) => q.signum(),
            Scalar::CosPi8(q) => q.signum(),
            Scalar::Real(v) => {
                if *v > 0.0 {
                    1
                } else if *v < 0.0 {
                    -1
                } else {
                    0
                }
            }
        }
    }

    pub fn abs(&self) -> Scalar {
        if self.signum() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn checked_inv(&self) -> Result<Scalar, AlgebraError> {
        match self {
            Scalar::Rational(q) => {
                if q.is_zero() {
                    Err(AlgebraError::DivisionByZero)
                } else {
                    Ok(Scalar::Rational(q.recip()))
                }
            }
            Scalar::Sqrt2(q) => q.inv().map(Scalar::Sqrt2),
            Scalar::CosPi8(q) => q.inv().map(Scalar::CosPi8),
            Scalar::Real(v) => {
                if *v == 0.0 {
                    Err(AlgebraError::DivisionByZero)
                } else {
                    Ok(Scalar::Real(1.0 / v))
                }
            }
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, AlgebraError> {
        Ok(self.clone() * other.checked_inv()?)
    }

    /// Square root, exact whenever the root lies in the supported fields.
    pub fn sqrt(&self) -> Result<Scalar, AlgebraError> {
        if self.signum() < 0 {
            return Err(AlgebraError::NegativeSqrt(self.to_string()));
        }
        let exact = match self {
            Scalar::Real(v) => return Ok(Scalar::Real(v.sqrt())),
            Scalar::Rational(q) => rational_sqrt(q).map(Scalar::Rational).or_else(|| {
                let lifted = QSqrt2::from_rational(q.clone());
                lifted
                    .sqrt()
                    .map(Scalar::Sqrt2)
                    .or_else(|| QCosPi8::from_sqrt2(lifted).sqrt().map(Scalar::CosPi8))
            }),
            Scalar::Sqrt2(q) => q
                .sqrt()
                .map(Scalar::Sqrt2)
                .or_else(|| QCosPi8::from_sqrt2(q.clone()).sqrt().map(Scalar::CosPi8)),
            Scalar::CosPi8(q) => q.sqrt().map(Scalar::CosPi8),
        };
        exact.ok_or_else(|| AlgebraError::NoExactSqrt(self.to_string()))
    }

    /// Zero test with an absolute tolerance in real mode; exact otherwise.
    pub fn is_negligible(&self, tol: f64) -> bool {
        match self {
            Scalar::Real(v) => v.abs() <= tol,
            _ => Ring::is_zero(self),
        }
    }

    fn add_impl(&self, other: &Scalar) -> Scalar {
        match Scalar::unify(self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Sqrt2(a), Scalar::Sqrt2(b)) => Scalar::Sqrt2(a + b),
            (Scalar::CosPi8(a), Scalar::CosPi8(b)) => Scalar::CosPi8(a + b),
            (Scalar::Real(a), Scalar::Real(b)) => Scalar::Real(a + b),
            _ => unreachable!(),
        }
    }

    fn mul_impl(&self, other: &Scalar) -> Scalar {
        match Scalar::unify(self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Sqrt2(a), Scalar::Sqrt2(b)) => Scalar::Sqrt2(a * b),
            (Scalar::CosPi8(a), Scalar::CosPi8(b)) => Scalar::CosPi8(a * b),
            (Scalar::Real(a), Scalar::Real(b)) => Scalar::Real(a * b),
            _ => unreachable!(),
        }
    }

    fn neg_impl(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a.clone()),
            Scalar::Sqrt2(a) => Scalar::Sqrt2(-a.clone()),
            Scalar::CosPi8(a) => Scalar::CosPi8(-a.clone()),
            Scalar::Real(a) => Scalar::Real(-a),
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::int(0)
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::int(v)
    }
}

impl From<Rational> for Scalar {
    fn from(q: Rational) -> Self {
        Scalar::Rational(q)
    }
}

impl From<QSqrt2> for Scalar {
    fn from(q: QSqrt2) -> Self {
        Scalar::Sqrt2(q)
    }
}

impl From<QCosPi8> for Scalar {
    fn from(q: QCosPi8) -> Self {
        Scalar::CosPi8(q)
    }
}

impl From<f64> for Scalar {
    fn from(v: f64) -> Self {
        Scalar::Real(v)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $imp:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$imp(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                self.$imp(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_impl);
forward_binop!(Mul, mul, mul_impl);

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        self.add_impl(&rhs.neg_impl())
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self.add_impl(&rhs.neg_impl())
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_impl()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_impl()
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        match Scalar::unify(self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a == b,
            (Scalar::Sqrt2(a), Scalar::Sqrt2(b)) => a == b,
            (Scalar::CosPi8(a), Scalar::CosPi8(b)) => a == b,
            (Scalar::Real(a), Scalar::Real(b)) => a == b,
            _ => unreachable!(),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Scalar) -> Option<Ordering> {
        match Scalar::unify(self, other) {
            (Scalar::Real(a), Scalar::Real(b)) => a.partial_cmp(&b),
            (a, b) => Some((a - b).signum().cmp(&0)),
        }
    }
}

impl Ring for Scalar {
    fn zero() -> Self {
        Scalar::int(0)
    }
    fn one() -> Self {
        Scalar::int(1)
    }
    fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Sqrt2(q) => q.is_zero(),
            Scalar::CosPi8(q) => q.is_zero(),
            Scalar::Real(v) => *v == 0.0,
        }
    }
    fn from_i64(v: i64) -> Self {
        Scalar::int(v)
    }
}

impl Field for Scalar {
    fn inv(&self) -> Result<Self, AlgebraError> {
        self.checked_inv()
    }
    fn magnitude(&self) -> f64 {
        self.to_f64().abs()
    }
}

impl ScalarRing for Scalar {
    fn from_scalar(s: &Scalar) -> Self {
        s.clone()
    }
    fn to_scalar(&self) -> Option<Scalar> {
        Some(self.clone())
    }
    fn scale(&self, s: &Scalar) -> Self {
        self.mul_impl(s)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{}", format_rational(q)),
            Scalar::Sqrt2(q) => write!(f, "{q}"),
            Scalar::CosPi8(q) => write!(f, "{q}"),
            Scalar::Real(v) => write!(f, "{v:?}"),
        }
    }
}

/// Rounds to 15 significant digits so serialized reports are stable.
pub fn round_sig15(v: f64) -> f64 {
    if !v.is_finite() || v == 0.0 {
        return v;
    }
    format!("{v:.14e}").parse().unwrap_or(v)
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(1))?;
        match self {
            Scalar::Rational(q) => map.serialize_entry("rational", &format_rational(q))?,
            Scalar::Sqrt2(q) => {
                map.serialize_entry("sqrt2", &[format_rational(&q.a), format_rational(&q.b)])?
            }
            Scalar::CosPi8(q) => map.serialize_entry(
                "sqrt2_u",
                &[
                    [format_rational(&q.a.a), format_rational(&q.a.b)],
                    [format_rational(&q.b.a), format_rational(&q.b.b)],
                ],
            )?,
            Scalar::Real(v) => map.serialize_entry("real", &round_sig15(*v))?,
        }
        map.end()
    }
}
