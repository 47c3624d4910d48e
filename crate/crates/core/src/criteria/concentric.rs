//! Curves made entirely of origin-centred ellipses, one per positive eigenvalue:
//! `P_n = Π_k (ζ − C_k − ρX_k²)`.
//!
//! Matching the coefficients of `ζ^{m−j}ρ^{j−1}` gives `m` linear equations
//! `Σ_k e_{j−1}(X_i² : i ≠ k)·C_k = (−1)^j [ρ^{j−1}] p_{m−j}` fixing the `C_k`;
//! the coefficients of `ζ^{m−j}ρ^i` with `i ≤ j − 2` are the residuals.

use crate::algebra::{solve_linear_symbolic, Poly, Ring, Scalar, ScalarRing, ZetaRhoPoly};
use crate::kippenhahn::kippenhahn_poly_from;
use crate::reciprocal::{focus, squared_focus, XiVector};

use super::report::{CheckOptions, CriterionReport, EllipseSpec};
use super::{n7, CriteriaError};

/// Elementary symmetric polynomials `e_0..e_len` of `values`.
fn elementary(values: &[Scalar]) -> Vec<Scalar> {
    let mut e = vec![Scalar::int(1)];
    for v in values {
        e.push(Scalar::int(0));
        for j in (1..e.len()).rev() {
            e[j] = e[j].clone() + e[j - 1].clone() * v.clone();
        }
    }
    e
}

/// The coefficient matrix `Z` of the linear system for `C_1..C_m`.
pub fn concentric_matrix(n: usize) -> Vec<Vec<Scalar>> {
    let m = n / 2;
    let sq: Vec<Scalar> = (1..=m).map(|k| squared_focus(n, k)).collect();
    let cols: Vec<Vec<Scalar>> = (0..m)
        .map(|k| {
            let others: Vec<Scalar> = sq
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(_, s)| s.clone())
                .collect();
            elementary(&others)
        })
        .collect();
    (0..m)
        .map(|j| (0..m).map(|k| cols[k][j].clone()).collect())
        .collect()
}

/// `C_1..C_m` and the `m(m−1)/2` residuals, over any scalar ring.
pub fn concentric_system<R: ScalarRing>(
    xi: &[R],
) -> Result<(Vec<R>, Vec<(String, R)>), CriteriaError> {
    let kp = kippenhahn_poly_from(xi);
    let (n, m) = (kp.n, kp.m());
    if m == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    let rhs: Vec<R> = (1..=m)
        .map(|j| {
            let c = kp.coeff(m - j).coeff(j - 1);
            if j % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    let cs = solve_linear_symbolic(concentric_matrix(n), rhs)?;

    let mut product: ZetaRhoPoly<R> = Poly::one();
    for (k, ck) in cs.iter().enumerate() {
        let x2 = R::from_scalar(&squared_focus(n, k + 1));
        product = product * Poly::new(vec![-Poly::linear(ck.clone(), x2), Poly::one()]);
    }
    let diff = product - kp.poly.clone();
    let mut residuals = Vec::new();
    for j in 2..=m {
        for i in 0..=j - 2 {
            residuals.push((format!("z{}r{}", m - j, i), diff.coeff(m - j).coeff(i)));
        }
    }
    Ok((cs, residuals))
}

/// Decides whether the curve consists of `m` concentric ellipses with foci `±X_k`
/// (plus the origin when `n` is odd).
pub fn concentric_check(
    xi: &XiVector,
    opts: CheckOptions,
) -> Result<CriterionReport, CriteriaError> {
    let (n, m) = (xi.n(), xi.m());
    let exact = xi.is_exact() && (1..=m).all(|k| squared_focus(n, k).is_exact());
    let mode = opts.mode(exact, xi.sup_norm(), m);
    let (cs, residuals) = concentric_system(xi.entries())?;

    let mut report = CriterionReport::new("concentric", mode);
    for (k, c) in cs.iter().enumerate() {
        report.param(&format!("C{}", k + 1), c.clone());
        report
            .ellipses
            .push(EllipseSpec::origin(focus(n, k + 1), c.clone()));
    }
    for (label, r) in residuals {
        report.residual(label, r);
    }
    if n == 7 {
        let values: Vec<Scalar> = report.residuals.iter().map(|r| r.value.clone()).collect();
        n7::check_concentric_literals(xi, &values, mode)?;
    }
    report.decide(&cs);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::Verdict;

    #[test]
    fn matrix_for_seven() {
        let z = concentric_matrix(7);
        let s = |a, b| Scalar::sqrt2(a, b);
        assert_eq!(
            z,
            vec![
                vec![s(1, 0), s(1, 0), s(1, 0)],
                vec![s(4, -1), s(4, 0), s(4, 1)],
                vec![s(4, -2), s(2, 0), s(4, 2)],
            ]
        );
    }

    #[test]
    fn figure_two() {
        let xi = XiVector::from_ints(&[1, 1, 2, 0, 1, 1]).unwrap();
        let r = concentric_check(&xi, CheckOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.parameter("C1"), Some(&Scalar::sqrt2(2, 1)));
        assert_eq!(r.parameter("C2"), Some(&Scalar::int(2)));
        assert_eq!(r.parameter("C3"), Some(&Scalar::sqrt2(2, -1)));
        assert_eq!(r.residuals.len(), 3);
    }

    #[test]
    fn figure_one_fails() {
        let xi = XiVector::from_ints(&[1, 4, 1, 1, 2, 3]).unwrap();
        let r = concentric_check(&xi, CheckOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Fails);
    }

    #[test]
    fn zero_is_degenerate() {
        for n in 2..=9 {
            let xi = XiVector::new(n, vec![Scalar::int(0); n - 1]).unwrap();
            let r = concentric_check(&xi, CheckOptions::default()).unwrap();
            assert_eq!(r.verdict, Verdict::HoldsDegenerately, "n = {n}");
        }
    }
}
