//! Eigenpairs of real symmetric tridiagonal matrices: Sturm-sequence bisection for
//! the eigenvalues, inverse iteration for the eigenvectors.

/// Number of eigenvalues strictly below `x`, counted from the pivots of the
/// `LDLᵀ` factorisation of `T − xI`.
pub fn sturm_count(diag: &[f64], off: &[f64], x: f64) -> usize {
    let tiny = f64::MIN_POSITIVE.sqrt();
    let mut count = 0;
    let mut q = 1.0;
    for i in 0..diag.len() {
        let coupling = if i == 0 {
            0.0
        } else {
            off[i - 1] * off[i - 1] / q
        };
        q = diag[i] - x - coupling;
        if q == 0.0 {
            q = -tiny;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Gershgorin interval containing the spectrum.
fn bounds(diag: &[f64], off: &[f64]) -> (f64, f64) {
    let n = diag.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let r =
            if i > 0 { off[i - 1].abs() } else { 0.0 } + if i + 1 < n { off[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - r);
        hi = hi.max(diag[i] + r);
    }
    let pad = 1e-12 * (1.0 + lo.abs().max(hi.abs()));
    (lo - pad, hi + pad)
}

/// All eigenvalues in decreasing order, each bisected to machine precision.
pub fn eigenvalues(diag: &[f64], off: &[f64]) -> Vec<f64> {
    let n = diag.len();
    let (lo, hi) = bounds(diag, off);
    (0..n)
        .map(|i| {
            // The eigenvalue with exactly n − 1 − i eigenvalues below it (descending order).
            let target = n - 1 - i;
            let (mut a, mut b) = (lo, hi);
            loop {
                let mid = 0.5 * (a + b);
                if mid <= a || mid >= b {
                    break mid;
                }
                if sturm_count(diag, off, mid) > target {
                    b = mid;
                } else {
                    a = mid;
                }
            }
        })
        .collect()
}

/// Solves `(T − σI)x = b` by Gaussian elimination with partial pivoting.
fn solve_shifted(diag: &[f64], off: &[f64], sigma: f64, rhs: &[f64]) -> Vec<f64> {
    let n = diag.len();
    // Row i holds entries in columns i, i+1, i+2 after pivoting.
    let mut rows: Vec<[f64; 3]> = (0..n)
        .map(|i| [diag[i] - sigma, if i + 1 < n { off[i] } else { 0.0 }, 0.0])
        .collect();
    let mut sub: Vec<f64> = (0..n)
        .map(|i| if i > 0 { off[i - 1] } else { 0.0 })
        .collect();
    let mut b = rhs.to_vec();
    let eps = f64::EPSILON * (1.0 + diag.iter().chain(off).fold(0.0f64, |m, v| m.max(v.abs())));
    for i in 0..n {
        if i + 1 < n && sub[i + 1].abs() > rows[i][0].abs() {
            // Swap rows i and i+1; row i+1 starts at column i.
            let lower = [sub[i + 1], rows[i + 1][0], rows[i + 1][1]];
            let upper = rows[i];
            rows[i] = lower;
            sub[i + 1] = upper[0];
            rows[i + 1] = [upper[1], upper[2], 0.0];
            b.swap(i, i + 1);
        }
        if rows[i][0].abs() < eps {
            rows[i][0] = eps;
        }
        if i + 1 < n {
            let f = sub[i + 1] / rows[i][0];
            rows[i + 1][0] -= f * rows[i][1];
            rows[i + 1][1] -= f * rows[i][2];
            b[i + 1] -= f * b[i];
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut s = b[i];
        if i + 1 < n {
            s -= rows[i][1] * x[i + 1];
        }
        if i + 2 < n {
            s -= rows[i][2] * x[i + 2];
        }
        x[i] = s / rows[i][0];
    }
    x
}

fn normalize(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        v.iter_mut().for_each(|x| *x /= norm);
    }
}

/// Unit eigenvector for the eigenvalue `lambda`, orthogonalised against `against`
/// (eigenvectors of nearby eigenvalues already computed).
pub fn eigenvector(diag: &[f64], off: &[f64], lambda: f64, against: &[Vec<f64>]) -> Vec<f64> {
    let n = diag.len();
    let mut v: Vec<f64> = (0..n)
        .map(|i| 1.0 + 0.1 * ((i * 7919) % 13) as f64)
        .collect();
    normalize(&mut v);
    for _ in 0..3 {
        for u in against {
            let d: f64 = u.iter().zip(&v).map(|(a, b)| a * b).sum();
            v.iter_mut().zip(u).for_each(|(x, a)| *x -= d * a);
        }
        v = solve_shifted(diag, off, lambda, &v);
        normalize(&mut v);
    }
    for u in against {
        let d: f64 = u.iter().zip(&v).map(|(a, b)| a * b).sum();
        v.iter_mut().zip(u).for_each(|(x, a)| *x -= d * a);
    }
    normalize(&mut v);
    v
}

/// Eigenvalues (decreasing) and matching unit eigenvectors.
pub fn eigen_decomposition(diag: &[f64], off: &[f64]) -> (Vec<f64>, Vec<Vec<f64>>) {
    let values = eigenvalues(diag, off);
    let scale = 1.0 + values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut vectors: Vec<Vec<f64>> = Vec::with_capacity(values.len());
    for (i, &lambda) in values.iter().enumerate() {
        // Orthogonalise within clusters of close eigenvalues.
        let cluster: Vec<Vec<f64>> = (0..i)
            .filter(|&j| (values[j] - lambda).abs() < 1e-7 * scale)
            .map(|j| vectors[j].clone())
            .collect();
        vectors.push(eigenvector(diag, off, lambda, &cluster));
    }
    (values, vectors)
}
