//! Ring and field abstractions shared by the scalar, polynomial and symbolic types.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{AlgebraError, Scalar};

/// A commutative ring with unity.
///
/// Arithmetic is by value; generic code clones where it needs to keep an operand.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(v: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Result<Self, AlgebraError>;

    /// Magnitude used to choose pivots during elimination.
    fn magnitude(&self) -> f64;

    fn div(&self, other: &Self) -> Result<Self, AlgebraError> {
        Ok(self.clone() * other.inv()?)
    }
}

/// A ring that contains [`Scalar`] as its constants.
///
/// Implemented by [`Scalar`] itself and by symbolic polynomials over it, so the
/// criteria engine can run on numbers and on indeterminate `ξ` alike.
pub trait ScalarRing: Ring {
    fn from_scalar(s: &Scalar) -> Self;

    /// The value of `self` when it is a constant.
    fn to_scalar(&self) -> Option<Scalar>;

    fn scale(&self, s: &Scalar) -> Self {
        self.clone() * Self::from_scalar(s)
    }
}

impl Ring for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
}

impl Field for f64 {
    fn inv(&self) -> Result<Self, AlgebraError> {
        if *self == 0.0 {
            Err(AlgebraError::DivisionByZero)
        } else {
            Ok(1.0 / self)
        }
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_by_squaring() {
        assert_eq!(3.0f64.pow(0), 1.0);
        assert_eq!(3.0f64.pow(5), 243.0);
        assert_eq!((-2.0f64).pow(3), -8.0);
    }
}
