//! Helpers around arbitrary-precision rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    if q.is_zero() {
        return Some(Rational::zero());
    }
    let num = q.numer();
    let den = q.denom();
    let rn = num.sqrt();
    let rd = den.sqrt();
    if &(&rn * &rn) == num && &(&rd * &rd) == den {
        Some(Rational::new(rn, rd))
    } else {
        None
    }
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        if q.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// `p/q`, or just `p` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_squares() {
        assert_eq!(rational_sqrt(&rat(9, 16)), Some(rat(3, 4)));
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
        assert_eq!(rational_sqrt(&rat(-4, 1)), None);
        assert_eq!(rational_sqrt(&int(0)), Some(int(0)));
    }

    #[test]
    fn reduced_and_positive_denominator() {
        let q = rat(6, -4);
        assert_eq!(format_rational(&q), "-3/2");
        assert!(q.denom().is_positive());
    }
}
