//! Origin-centred ellipses: `ζ − (C + ρX²)` divides `P_n`.
//!
//! Writing `P_n(C + ρX², ρ) = Σ f_j ρ^j`, the top coefficient `f_m` is `Q_n(X²)`,
//! which pins `X` to a positive eigenvalue; `f_{m−1}` is linear in `C` and fixes
//! it; `f_0..f_{m−2}` are the remaining conditions.

use crate::algebra::{Field, Poly, Ring, Scalar, ScalarRing};
use crate::kippenhahn::{kippenhahn_poly, kippenhahn_poly_from, lift_to_c, substitute_linear};
use crate::reciprocal::{focus, squared_focus, XiVector};

use super::report::{CheckOptions, CriterionReport, EllipseSpec};
use super::{n7, CriteriaError};

/// `C` recovered from `f_{m−1}`, the residuals `f_0..f_{m−2}` and `f_m`.
#[derive(Clone, Debug, PartialEq)]
pub struct OriginSystem<R> {
    pub c: R,
    pub residuals: Vec<R>,
    pub top: R,
}

/// Runs the elimination over any scalar ring, e.g. with symbolic `ξ`.
pub fn origin_system<R: ScalarRing>(
    xi: &[R],
    x2: &Scalar,
) -> Result<OriginSystem<R>, CriteriaError> {
    let p = kippenhahn_poly_from(xi);
    let m = p.m();
    let lifted = lift_to_c(&p);
    let f = substitute_linear(&lifted, &Poly::x(), &Poly::constant(R::from_scalar(x2)));
    let linear = f.coeff(m - 1);
    if linear.degree().unwrap_or(0) > 1 {
        return Err(CriteriaError::Internal("f_{m-1} is not linear in C".into()));
    }
    let slope = linear
        .coeff(1)
        .to_scalar()
        .ok_or_else(|| CriteriaError::Internal("coefficient of C depends on ξ".into()))?;
    if slope.is_zero() {
        return Err(CriteriaError::Internal(
            "coefficient of C in f_{m-1} vanishes".into(),
        ));
    }
    let c = linear.coeff(0).scale(&(-slope.inv()?));
    let residuals = (0..m - 1).map(|j| f.coeff(j).eval(&c)).collect();
    let top = f.coeff(m).eval(&c);
    Ok(OriginSystem { c, residuals, top })
}

/// Decides whether the curve contains the ellipse with foci `±X_k` centred at 0.
pub fn origin_ellipse_check(
    xi: &XiVector,
    k: usize,
    opts: CheckOptions,
) -> Result<CriterionReport, CriteriaError> {
    let n = xi.n();
    let m = xi.m();
    if k == 0 || k > m {
        return Err(CriteriaError::FocusIndex { k, m });
    }
    let x2 = squared_focus(n, k);
    let x = focus(n, k);
    let mode = opts.mode(xi.is_exact() && x2.is_exact(), xi.sup_norm(), m);
    let sys = origin_system(xi.entries(), &x2)?;

    let mut report = CriterionReport::new("origin", mode);
    report.param("k", Scalar::int(k as i64));
    report.param("X", x.clone());
    report.param("C", sys.c.clone());
    for (j, r) in sys.residuals.iter().enumerate() {
        report.residual(format!("f_{j}"), r.clone());
    }
    if !mode.is_zero(&sys.top) {
        return Err(CriteriaError::Internal(format!(
            "f_m = Q_n(X_k) = {} does not vanish",
            sys.top
        )));
    }

    // Divisibility of P_n by ζ − (C + ρX²) must agree with the residual test.
    let p = kippenhahn_poly(xi);
    let divisor = Poly::new(vec![-Poly::linear(sys.c.clone(), x2.clone()), Poly::one()]);
    let (_, rem) = p.poly.divrem_monic(&divisor)?;
    let rem_zero = rem.coeff(0).coeffs().iter().all(|r| mode.is_zero(r));
    if mode.is_exact() && rem_zero != report.residuals_vanish() {
        return Err(CriteriaError::Internal(
            "divisibility remainder disagrees with residual system".into(),
        ));
    }
    report
        .notes
        .push(format!("divisibility remainder vanishes: {rem_zero}"));

    if n == 7 {
        n7::check_origin_literals(xi, k, &sys.c, &sys.residuals, mode)?;
    }

    report.ellipses.push(EllipseSpec::origin(x, sys.c.clone()));
    report.decide(&[sys.c]);
    Ok(report)
}
