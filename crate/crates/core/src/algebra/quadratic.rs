//! Exact arithmetic in ℚ(√2) and in its quadratic extension ℚ(√(2+√2)).
//!
//! The second field is the real cyclotomic field generated by `u = 2cos(π/8)`.
//! It holds every eigenvalue `2cos(kπ/8)` of a 7×7 reciprocal matrix, not just
//! the squared ones, so shifted-ellipse centers and half focal distances stay
//! exact.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, int, rational_sqrt, to_f64, Rational};
use super::AlgebraError;

/// `a + b·√2` with rational `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSqrt2 {
    pub a: Rational,
    pub b: Rational,
}

impl QSqrt2 {
    pub fn new(a: Rational, b: Rational) -> Self {
        QSqrt2 { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        QSqrt2 {
            a,
            b: Rational::zero(),
        }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        QSqrt2 {
            a: int(a),
            b: int(b),
        }
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    pub fn sqrt2() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        QSqrt2 {
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// Field norm `a² − 2b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - int(2) * &self.b * &self.b
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let n = self.norm();
        Ok(QSqrt2 {
            a: &self.a / &n,
            b: -(&self.b / &n),
        })
    }

    pub fn scale(&self, q: &Rational) -> Self {
        QSqrt2 {
            a: &self.a * q,
            b: &self.b * q,
        }
    }

    /// Exact sign, -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        if sa == 0 {
            return sb;
        }
        if sb == 0 || sa == sb {
            return sa;
        }
        // opposite signs: compare a² with 2b²
        let d = sign(&self.norm());
        if sa > 0 {
            d
        } else {
            -d
        }
    }

    /// Nearest double; when `a` and `b√2` nearly cancel, evaluates
    /// `(a² − 2b²)/(a − b√2)` instead.
    pub fn to_f64(&self) -> f64 {
        let (a, b) = (to_f64(&self.a), to_f64(&self.b) * std::f64::consts::SQRT_2);
        if sign(&self.a) * sign(&self.b) < 0 {
            to_f64(&self.norm()) / (a - b)
        } else {
            a + b
        }
    }

    /// Exact square root inside ℚ(√2), when one exists.
    pub fn sqrt(&self) -> Option<Self> {
        match self.signum() {
            -1 => return None,
            0 => return Some(Self::zero()),
            _ => {}
        }
        let mut candidates = Vec::new();
        if self.b.is_zero() {
            if let Some(g) = rational_sqrt(&self.a) {
                candidates.push(QSqrt2::from_rational(g));
            }
            if let Some(h) = rational_sqrt(&(&self.a / int(2))) {
                candidates.push(QSqrt2::new(Rational::zero(), h));
            }
        } else {
            // (g + h√2)² = a + b√2 with h² = H solving 8H² − 4aH + b² = 0
            if let Some(r) = rational_sqrt(&self.norm()) {
                for root in [&self.a + &r, &self.a - &r] {
                    let big_h = root / int(4);
                    if let Some(h) = rational_sqrt(&big_h) {
                        if h.is_zero() {
                            continue;
                        }
                        let g = &self.b / (int(2) * &h);
                        candidates.push(QSqrt2::new(g, h));
                    }
                }
            }
        }
        candidates
            .into_iter()
            .find(|c| &(c.clone() * c.clone()) == self)
            .map(|c| if c.signum() < 0 { -c } else { c })
    }
}

fn sign(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

impl Add for QSqrt2 {
    type Output = QSqrt2;
    fn add(self, o: QSqrt2) -> QSqrt2 {
        QSqrt2 {
            a: self.a + o.a,
            b: self.b + o.b,
        }
    }
}

impl Sub for QSqrt2 {
    type Output = QSqrt2;
    fn sub(self, o: QSqrt2) -> QSqrt2 {
        QSqrt2 {
            a: self.a - o.a,
            b: self.b - o.b,
        }
    }
}

impl Mul for QSqrt2 {
    type Output = QSqrt2;
    fn mul(self, o: QSqrt2) -> QSqrt2 {
        let a = &self.a * &o.a + int(2) * &self.b * &o.b;
        let b = &self.a * &o.b + &self.b * &o.a;
        QSqrt2 { a, b }
    }
}

impl Neg for QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2 {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl PartialOrd for QSqrt2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QSqrt2 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).signum().cmp(&0)
    }
}

impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", format_rational(&self.a));
        }
        let b_abs = self.b.abs();
        let b_part = if b_abs.is_one() {
            "sqrt2".to_string()
        } else {
            format!("{}*sqrt2", format_rational(&b_abs))
        };
        if self.a.is_zero() {
            if self.b.is_negative() {
                write!(f, "-{b_part}")
            } else {
                write!(f, "{b_part}")
            }
        } else {
            let op = if self.b.is_negative() { '-' } else { '+' };
            write!(f, "{}{}{}", format_rational(&self.a), op, b_part)
        }
    }
}

/// `a + b·u` with `a, b ∈ ℚ(√2)` and `u = √(2+√2) = 2cos(π/8)`, so `u² = 2 + √2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QCosPi8 {
    pub a: QSqrt2,
    pub b: QSqrt2,
}

impl QCosPi8 {
    pub fn new(a: QSqrt2, b: QSqrt2) -> Self {
        QCosPi8 { a, b }
    }

    pub fn from_sqrt2(a: QSqrt2) -> Self {
        QCosPi8 {
            a,
            b: QSqrt2::zero(),
        }
    }

    /// The generator `u = 2cos(π/8)`.
    pub fn u() -> Self {
        QCosPi8 {
            a: QSqrt2::zero(),
            b: QSqrt2::one(),
        }
    }

    fn u_squared() -> QSqrt2 {
        QSqrt2::from_ints(2, 1)
    }

    pub fn zero() -> Self {
        Self::from_sqrt2(QSqrt2::zero())
    }

    pub fn one() -> Self {
        Self::from_sqrt2(QSqrt2::one())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Relative norm down to ℚ(√2): `a² − (2+√2)b²`.
    pub fn relative_norm(&self) -> QSqrt2 {
        self.a.clone() * self.a.clone() - Self::u_squared() * self.b.clone() * self.b.clone()
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let n_inv = self.relative_norm().inv()?;
        Ok(QCosPi8 {
            a: self.a.clone() * n_inv.clone(),
            b: -(self.b.clone() * n_inv),
        })
    }

    pub fn signum(&self) -> i32 {
        let sa = self.a.signum();
        let sb = self.b.signum();
        if sa == 0 {
            return sb;
        }
        if sb == 0 || sa == sb {
            return sa;
        }
        let d = self.relative_norm().signum();
        if sa > 0 {
            d
        } else {
            -d
        }
    }

    /// Nearest double, avoiding cancellation like [`QSqrt2::to_f64`].
    pub fn to_f64(&self) -> f64 {
        let u = (2.0 + std::f64::consts::SQRT_2).sqrt();
        let (a, b) = (self.a.to_f64(), self.b.to_f64() * u);
        if self.a.signum() * self.b.signum() < 0 {
            let norm = self.a.clone() * self.a.clone()
                - self.b.clone() * self.b.clone() * Self::u_squared();
            norm.to_f64() / (a - b)
        } else {
            a + b
        }
    }

    /// Exact square root inside ℚ(√(2+√2)), when one exists.
    pub fn sqrt(&self) -> Option<Self> {
        match self.signum() {
            -1 => return None,
            0 => return Some(Self::zero()),
            _ => {}
        }
        let u2 = Self::u_squared();
        let mut candidates = Vec::new();
        if self.b.is_zero() {
            if let Some(g) = self.a.sqrt() {
                candidates.push(QCosPi8::from_sqrt2(g));
            }
            let ratio = self.a.clone() * u2.inv().ok()?;
            if let Some(d) = ratio.sqrt() {
                candidates.push(QCosPi8::new(QSqrt2::zero(), d));
            }
        } else {
            // (g + d·u)² = a + b·u with D = d² solving u²D² − aD + b²/4 = 0
            let half = Rational::new(1.into(), 2.into());
            let disc =
                self.a.clone() * self.a.clone() - u2.clone() * self.b.clone() * self.b.clone();
            if let Some(r) = disc.sqrt() {
                let denom = (u2.clone() + u2.clone()).inv().ok()?;
                for root in [self.a.clone() + r.clone(), self.a.clone() - r.clone()] {
                    let big_d = root * denom.clone();
                    if let Some(d) = big_d.sqrt() {
                        if d.is_zero() {
                            continue;
                        }
                        let g = self.b.scale(&half) * d.inv().ok()?;
                        candidates.push(QCosPi8::new(g, d));
                    }
                }
            }
        }
        candidates
            .into_iter()
            .find(|c| &(c.clone() * c.clone()) == self)
            .map(|c| if c.signum() < 0 { -c } else { c })
    }
}

impl Add for QCosPi8 {
    type Output = QCosPi8;
    fn add(self, o: QCosPi8) -> QCosPi8 {
        QCosPi8 {
            a: self.a + o.a,
            b: self.b + o.b,
        }
    }
}

impl Sub for QCosPi8 {
    type Output = QCosPi8;
    fn sub(self, o: QCosPi8) -> QCosPi8 {
        QCosPi8 {
            a: self.a - o.a,
            b: self.b - o.b,
        }
    }
}

impl Mul for QCosPi8 {
    type Output = QCosPi8;
    fn mul(self, o: QCosPi8) -> QCosPi8 {
        let a = self.a.clone() * o.a.clone() + QCosPi8::u_squared() * self.b.clone() * o.b.clone();
        let b = self.a * o.b + self.b * o.a;
        QCosPi8 { a, b }
    }
}

impl Neg for QCosPi8 {
    type Output = QCosPi8;
    fn neg(self) -> QCosPi8 {
        QCosPi8 {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl PartialOrd for QCosPi8 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QCosPi8 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).signum().cmp(&0)
    }
}

impl fmt::Display for QCosPi8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            write!(f, "({})*sqrt(2+sqrt2)", self.b)
        } else {
            write!(f, "{}+({})*sqrt(2+sqrt2)", self.a, self.b)
        }
    }
}
