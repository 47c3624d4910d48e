//! Pairs of ellipses `E ∪ (−E)` centred at `±p`.
//!
//! With `ζ± = C + (p² + X²)ρ ± 2p·s`, `s² = ρ(C + X²ρ)`, the pair lies on the
//! curve iff `P_n(ζ₊) = P_n(ζ₋) = 0`, i.e. iff every coefficient of the even part
//! `R_e` and of the odd part `R_o` vanishes.

use serde::Serialize;

use crate::algebra::{Field, Poly, Ring, Scalar, ScalarRing, Symbolic};
use crate::kippenhahn::{even_odd_split, kippenhahn_poly_from, lift_to_c};
use crate::reciprocal::{exact_squared_focus, focus, squared_focus, XiVector};

use super::report::{CheckOptions, CriterionReport, EllipseSpec, Mode};
use super::{n7, CriteriaError};

/// Center and half focal distance of the right-hand ellipse, with its foci.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ShiftedPair {
    pub p: Scalar,
    pub x: Scalar,
    pub f_plus: Scalar,
    pub f_minus: Scalar,
}

impl ShiftedPair {
    pub fn from_foci(f_plus: Scalar, f_minus: Scalar) -> Self {
        let half = Scalar::ratio(1, 2);
        ShiftedPair {
            p: (f_plus.clone() + f_minus.clone()) * half.clone(),
            x: (f_plus.clone() - f_minus.clone()) * half,
            f_plus,
            f_minus,
        }
    }

    /// Both foci on the same side of the origin.
    pub fn same_side(&self) -> bool {
        self.f_minus.signum() > 0
    }
}

/// All `(p, X)` with `p, X > 0` whose foci `p ± X` are nonzero eigenvalues:
/// `f₊ = X_i`, `f₋ = ±X_j` with `j > i`.
pub fn admissible_pairs(n: usize) -> Vec<ShiftedPair> {
    let m = n / 2;
    let mut out = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            let (fi, fj) = (focus(n, i), focus(n, j));
            out.push(ShiftedPair::from_foci(fi.clone(), fj.clone()));
            out.push(ShiftedPair::from_foci(fi, -fj));
        }
    }
    out
}

/// Coefficients of `R_e` and `R_o` with `C` eliminated.
#[derive(Clone, Debug, PartialEq)]
pub struct ShiftedSystem<R> {
    pub c: R,
    /// `R_e` coefficients of `ρ^0..ρ^m` at the recovered `C`.
    pub even: Vec<R>,
    /// `R_o` coefficients of `ρ^0..ρ^{m−1}` at the recovered `C`.
    pub odd: Vec<R>,
    /// Which coefficient fixed `C`: `(true, j)` for `R_e[ρ^j]`, `(false, j)` for `R_o[ρ^j]`.
    pub pivot: (bool, usize),
}

impl<R: Ring> ShiftedSystem<R> {
    /// The `2m − 2` residuals with their labels; the leading coefficients
    /// and the pivot are excluded.
    pub fn residuals(&self) -> Vec<(String, R)> {
        let m = self.even.len() - 1;
        let mut out = Vec::new();
        for (j, e) in self.even.iter().enumerate().take(m) {
            if self.pivot != (true, j) {
                out.push((format!("e_{j}"), e.clone()));
            }
        }
        for (j, o) in self.odd.iter().enumerate().take(m - 1) {
            if self.pivot != (false, j) {
                out.push((format!("o_{j}"), o.clone()));
            }
        }
        out
    }
}

/// Runs the elimination over any scalar ring, e.g. with symbolic `ξ`.
pub fn shifted_system<R: ScalarRing>(
    xi: &[R],
    p: &Scalar,
    x: &Scalar,
) -> Result<ShiftedSystem<R>, CriteriaError> {
    let kp = kippenhahn_poly_from(xi);
    let m = kp.m();
    if m < 2 {
        return Err(CriteriaError::InvalidConfig(format!(
            "n = {} has no shifted pairs",
            kp.n
        )));
    }
    let lifted = lift_to_c(&kp);
    let lift = |s: &Scalar| Poly::constant(R::from_scalar(s));
    let pair = even_odd_split(
        &lifted,
        &lift(p),
        &lift(&(x.clone() * x.clone())),
        &Poly::x(),
    );
    let candidates = [
        (true, m - 1, pair.re.coeff(m - 1)),
        (false, m - 2, pair.ro.coeff(m - 2)),
    ];
    let mut chosen = None;
    for (even, j, lin) in candidates {
        if lin.degree().unwrap_or(0) > 1 {
            continue;
        }
        if let Some(slope) = lin.coeff(1).to_scalar().filter(|s| !s.is_zero()) {
            chosen = Some(((even, j), lin.coeff(0).scale(&(-slope.inv()?))));
            break;
        }
    }
    let (pivot, c) =
        chosen.ok_or_else(|| CriteriaError::Internal("no coefficient is linear in C".into()))?;
    let even = (0..=m).map(|j| pair.re.coeff(j).eval(&c)).collect();
    let odd = (0..m).map(|j| pair.ro.coeff(j).eval(&c)).collect();
    Ok(ShiftedSystem {
        c,
        even,
        odd,
        pivot,
    })
}

/// `L = a_o·R_e[ρ^{m−1}] − a_e·R_o[ρ^{m−2}]` where `a_e`, `a_o` are the
/// coefficients of `C`: a linear form in `ξ` implied by the pair conditions.
pub fn eliminated_linear_form(n: usize, p: &Scalar, x: &Scalar) -> Result<Symbolic, CriteriaError> {
    let xi: Vec<Symbolic> = (0..n - 1).map(Symbolic::var).collect();
    let kp = kippenhahn_poly_from(&xi);
    let m = kp.m();
    let lift = |s: &Scalar| Poly::constant(Symbolic::constant(s.clone()));
    let pair = even_odd_split(
        &lift_to_c(&kp),
        &lift(p),
        &lift(&(x.clone() * x.clone())),
        &Poly::x(),
    );
    let (e, o) = (pair.re.coeff(m - 1), pair.ro.coeff(m - 2));
    if e.degree().unwrap_or(0) > 1 || o.degree().unwrap_or(0) > 1 {
        return Err(CriteriaError::Internal(
            "pivot coefficients are not linear in C".into(),
        ));
    }
    Ok(o.coeff(1) * e.coeff(0) - e.coeff(1) * o.coeff(0))
}

fn check_foci(n: usize, pair: &ShiftedPair, exact: bool) -> Result<(), CriteriaError> {
    let in_spectrum = |f: &Scalar| {
        let f2 = f.clone() * f.clone();
        (1..=n / 2).any(|k| match exact_squared_focus(n, k) {
            Some(s) if exact && f2.is_exact() => s == f2,
            _ => (squared_focus(n, k).to_f64() - f2.to_f64()).abs() < 1e-9,
        })
    };
    for f in [&pair.f_plus, &pair.f_minus] {
        if f.to_f64().abs() < 1e-12 || !in_spectrum(f) {
            return Err(CriteriaError::NotEigenvalues(format!(
                "p = {}, X = {}: focus {} is not a nonzero eigenvalue",
                pair.p, pair.x, f
            )));
        }
    }
    Ok(())
}

/// Decides whether the curve contains the pair of ellipses centred at `±p`
/// with half focal distance `X`.
pub fn shifted_pair_residuals(
    xi: &XiVector,
    p: &Scalar,
    x: &Scalar,
    opts: CheckOptions,
) -> Result<CriterionReport, CriteriaError> {
    if p.signum() <= 0 || x.signum() <= 0 {
        return Err(CriteriaError::InvalidConfig(format!(
            "center and half focal distance must be positive, got p = {p}, X = {x}"
        )));
    }
    let n = xi.n();
    let m = xi.m();
    let pair = ShiftedPair {
        p: p.clone(),
        x: x.clone(),
        f_plus: p.clone() + x.clone(),
        f_minus: p.clone() - x.clone(),
    };
    let exact = xi.is_exact() && p.is_exact() && x.is_exact();
    check_foci(n, &pair, exact)?;
    let mode = opts.mode(exact, xi.sup_norm(), m);
    let (xi_in, p_in, x_in) = if mode.is_exact() || exact {
        (xi.clone(), p.clone(), x.clone())
    } else {
        (xi.to_real(), p.to_real(), x.to_real())
    };
    let sys = shifted_system(xi_in.entries(), &p_in, &x_in)?;

    // The leading coefficients depend only on the foci and vanish on the spectrum.
    let lead_tol = Mode::Numeric {
        tolerance: 1e-9 * (1.0 + p.to_f64().abs() + x.to_f64().abs()).powi(2 * m as i32 + 2),
        approximate: false,
    };
    let lead_mode = if mode.is_exact() { mode } else { lead_tol };
    if !lead_mode.is_zero(&sys.even[m]) || !lead_mode.is_zero(&sys.odd[m - 1]) {
        return Err(CriteriaError::Internal(
            "leading coefficients of R_e, R_o do not vanish".into(),
        ));
    }

    let mut report = CriterionReport::new("shifted-pair", mode);
    report.param("p", p.clone());
    report.param("X", x.clone());
    report.param("C", sys.c.clone());
    for (label, r) in sys.residuals() {
        report.residual(label, r);
    }
    if pair.same_side() {
        report
            .notes
            .push("both foci lie on the same side of the origin".into());
    }
    if n == 7 {
        n7::check_shifted_literals(&xi_in, p, x, &sys.c, &sys.even, &sys.odd, mode)?;
    }
    let e = EllipseSpec::new(p.clone(), x.clone(), sys.c.clone());
    report.ellipses.push(e.clone());
    report.ellipses.push(e.mirrored());
    report.decide(&[sys.c]);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::Verdict;

    fn c(s: &str) -> Scalar {
        n7::constant(s)
    }

    #[test]
    fn pair_count() {
        assert_eq!(admissible_pairs(7).len(), 6);
        assert_eq!(admissible_pairs(9).len(), 12);
        assert!(admissible_pairs(3).is_empty());
    }

    #[test]
    fn theorem_six_second_vector() {
        let xi = XiVector::parse("sqrt2+1, 0, sqrt2+1, 0, sqrt2-1, 2", None, true).unwrap();
        let p = c("(sqrt(2+sqrt2)-sqrt(2-sqrt2))/2");
        let x = c("(sqrt(2+sqrt2)+sqrt(2-sqrt2))/2");
        let r = shifted_pair_residuals(&xi, &p, &x, CheckOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Holds, "{:?}", r.residuals);
        assert_eq!(r.parameter("C"), Some(&c("sqrt2+1")));
        assert_eq!(r.residuals.len(), 4);
    }

    #[test]
    fn rejects_zero_focus() {
        let xi = XiVector::from_ints(&[1; 6]).unwrap();
        let s = c("sqrt2/2");
        assert!(matches!(
            shifted_pair_residuals(&xi, &s, &s, CheckOptions::default()),
            Err(CriteriaError::NotEigenvalues(_))
        ));
        assert!(matches!(
            shifted_pair_residuals(
                &xi,
                &Scalar::int(1),
                &Scalar::int(1),
                CheckOptions::default()
            ),
            Err(CriteriaError::NotEigenvalues(_))
        ));
    }

    #[test]
    fn zero_xi_has_no_pair() {
        let xi = XiVector::from_ints(&[0; 6]).unwrap();
        for pair in admissible_pairs(7) {
            let r = shifted_pair_residuals(&xi, &pair.p, &pair.x, CheckOptions::default()).unwrap();
            // C vanishes, leaving a segment pair only if the remaining coefficients agree.
            assert_eq!(r.parameter("C"), Some(&Scalar::int(0)));
        }
    }
}
