//! Dense Gaussian elimination over a field.

use super::ring::{Field, ScalarRing};
use super::{AlgebraError, Scalar};

/// Index of the row at or below `col` with the largest nonzero pivot.
fn pivot_row<F: Field>(a: &[Vec<F>], col: usize) -> Option<usize> {
    (col..a.len())
        .filter(|&r| !a[r][col].is_zero())
        .max_by(|&r, &s| {
            a[r][col]
                .magnitude()
                .partial_cmp(&a[s][col].magnitude())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
}

pub fn determinant<F: Field>(mut a: Vec<Vec<F>>) -> F {
    let n = a.len();
    let mut det = F::one();
    for col in 0..n {
        let Some(p) = pivot_row(&a, col) else {
            return F::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let inv = a[col][col].inv().expect("pivot is nonzero");
        det = det * a[col][col].clone();
        for r in col + 1..n {
            let factor = a[r][col].clone() * inv.clone();
            if factor.is_zero() {
                continue;
            }
            for c in col..n {
                a[r][c] = a[r][c].clone() - factor.clone() * a[col][c].clone();
            }
        }
    }
    det
}

/// Solves `A·x = b` for square nonsingular `A`.
pub fn solve_linear<F: Field>(a: Vec<Vec<F>>, b: Vec<F>) -> Result<Vec<F>, AlgebraError> {
    eliminate(a, b, |v, s| v * s.clone(), |v, w, s| v - w * s.clone())
}

/// Solves `A·x = b` where `A` is a matrix of scalars and `b` carries symbolic entries.
pub fn solve_linear_symbolic<R: ScalarRing>(
    a: Vec<Vec<Scalar>>,
    b: Vec<R>,
) -> Result<Vec<R>, AlgebraError> {
    eliminate(a, b, |v, s| v.scale(s), |v, w, s| v - w.scale(s))
}

fn eliminate<F: Field, R: Clone>(
    mut a: Vec<Vec<F>>,
    mut b: Vec<R>,
    scale: impl Fn(R, &F) -> R,
    sub_scaled: impl Fn(R, R, &F) -> R,
) -> Result<Vec<R>, AlgebraError> {
    let n = a.len();
    if b.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(AlgebraError::Singular);
    }
    for col in 0..n {
        let p = pivot_row(&a, col).ok_or(AlgebraError::Singular)?;
        a.swap(p, col);
        b.swap(p, col);
        let inv = a[col][col].inv()?;
        for c in col..n {
            a[col][c] = a[col][c].clone() * inv.clone();
        }
        b[col] = scale(b[col].clone(), &inv);
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in col..n {
                a[r][c] = a[r][c].clone() - factor.clone() * a[col][c].clone();
            }
            b[r] = sub_scaled(b[r].clone(), b[col].clone(), &factor);
        }
    }
    Ok(b)
}
