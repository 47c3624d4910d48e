//! The `n = 7` shifted-pair decomposition `C(A) = E ∪ (−E) ∪ E₀ ∪ {0}`, tested
//! by expanding the factored form
//! `P₇ = (ζ − C₀ − ρX₀²)·(ζ² − 2ζ(C + ρ(p² + X²)) + (C + ρ(X² − p²))²)`.
//!
//! A tangent line forces `ξ₂ξ₃ = 0` (case i) or `ξ₄ξ₅ = 0` (case ii); each case
//! then fixes `C`, `C₀` linearly and leaves one quadratic condition.

use serde::Serialize;

use crate::algebra::{Poly, Ring, Scalar, ZetaRhoPoly};
use crate::kippenhahn::kippenhahn_poly;
use crate::reciprocal::{focus, XiVector};

use super::n7::{self, Point};
use super::report::{CheckOptions, CriterionReport, EllipseSpec, Mode};
use super::CriteriaError;

/// A shifted pair with opposite-sign foci and the remaining eigenvalue `X₀`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ShiftedPairConfig {
    pub p: Scalar,
    pub x: Scalar,
    pub x0: Scalar,
    /// Index `k ∈ 2..=5` with `ξ_k = 0`, when known.
    pub vanishing: Option<usize>,
}

impl ShiftedPairConfig {
    /// Builds the configuration with foci `f₊ > 0 > f₋`.
    pub fn from_foci(f_plus: Scalar, f_minus: Scalar, x0: Scalar) -> Self {
        let half = Scalar::ratio(1, 2);
        ShiftedPairConfig {
            p: (f_plus.clone() + f_minus.clone()) * half.clone(),
            x: (f_plus - f_minus) * half,
            x0,
            vanishing: None,
        }
    }

    pub fn with_vanishing(mut self, k: usize) -> Self {
        self.vanishing = Some(k);
        self
    }

    fn validate(&self) -> Result<(), CriteriaError> {
        let bad = |msg: String| Err(CriteriaError::InvalidConfig(msg));
        if self.p.signum() <= 0 || self.p >= self.x {
            return bad(format!(
                "need 0 < p < X, got p = {}, X = {}",
                self.p, self.x
            ));
        }
        let pos: Vec<f64> = (1..=3).map(|k| focus(7, k).to_f64()).collect();
        let find = |v: f64| pos.iter().position(|e| (e - v).abs() < 1e-9);
        let plus = find((self.p.clone() + self.x.clone()).to_f64());
        let minus = find((self.x.clone() - self.p.clone()).to_f64());
        let zero = find(self.x0.to_f64());
        match (plus, minus, zero) {
            (Some(a), Some(b), Some(c)) if a != b && c != a && c != b => {}
            _ => {
                return bad(format!(
                    "p ± X and X₀ must be the three distinct eigenvalue moduli, got p = {}, X = {}, X₀ = {}",
                    self.p, self.x, self.x0
                ))
            }
        }
        if let Some(k) = self.vanishing {
            if !(2..=5).contains(&k) {
                return bad(format!("vanishing index {k} outside 2..=5"));
            }
        }
        Ok(())
    }
}

/// The three opposite-sign configurations, ordered by the theorems that treat
/// them: `(f₊, f₋, X₀) = (X₁, −X₃, X₂), (X₁, −X₂, X₃), (X₂, −X₃, X₁)`.
pub fn shifted_configs_n7() -> Vec<ShiftedPairConfig> {
    [(1, 3, 2), (1, 2, 3), (2, 3, 1)]
        .into_iter()
        .map(|(a, b, c)| ShiftedPairConfig::from_foci(focus(7, a), -focus(7, b), focus(7, c)))
        .collect()
}

/// `(ζ − C₀ − ρX₀²)·(ζ² − 2ζ(C + ρ(p² + X²)) + (C + ρ(X² − p²))²)`.
fn factored(cfg: &ShiftedPairConfig, c: &Scalar, c0: &Scalar) -> ZetaRhoPoly {
    let p2 = cfg.p.clone() * cfg.p.clone();
    let x2 = cfg.x.clone() * cfg.x.clone();
    let lin = Poly::new(vec![
        -Poly::linear(c0.clone(), cfg.x0.clone() * cfg.x0.clone()),
        Poly::one(),
    ]);
    let mid = Poly::linear(c.clone(), p2.clone() + x2.clone()).scale(&Scalar::int(-2));
    let tail = Poly::linear(c.clone(), x2 - p2);
    let quad = Poly::new(vec![tail.clone() * tail, mid, Poly::one()]);
    lin * quad
}

/// Tests the decomposition for one configuration, trying case (i) then case (ii).
pub fn factorization_check_n7(
    xi: &XiVector,
    config: &ShiftedPairConfig,
    opts: CheckOptions,
) -> Result<CriterionReport, CriteriaError> {
    if xi.n() != 7 {
        return Err(CriteriaError::WrongSize(xi.n()));
    }
    config.validate()?;
    let exact = xi.is_exact() && config.p.is_exact() && config.x.is_exact() && config.x0.is_exact();
    let mode = opts.mode(exact, xi.sup_norm(), 3);
    let (xi, cfg) = if exact {
        (xi.clone(), config.clone())
    } else {
        let real = ShiftedPairConfig {
            p: config.p.to_real(),
            x: config.x.to_real(),
            x0: config.x0.to_real(),
            vanishing: config.vanishing,
        };
        (xi.to_real(), real)
    };

    let first = case_report(&xi, &cfg, 0, mode)?;
    if first.verdict.holds() {
        return Ok(first);
    }
    let second = case_report(&xi, &cfg, 1, mode)?;
    if second.verdict.holds() {
        return Ok(second);
    }
    // Neither holds: report the case whose tangency precondition is met, if any.
    let second_pre = second
        .residuals
        .first()
        .is_some_and(|r| mode.is_zero(&r.value));
    let first_pre = first
        .residuals
        .first()
        .is_some_and(|r| mode.is_zero(&r.value));
    Ok(if second_pre && !first_pre {
        second
    } else {
        first
    })
}

fn case_report(
    xi: &XiVector,
    cfg: &ShiftedPairConfig,
    case: usize,
    mode: Mode,
) -> Result<CriterionReport, CriteriaError> {
    let lits = n7::literals();
    let pt = Point::new(xi.entries());
    let (a, b) = if case == 0 { (2, 3) } else { (4, 5) };
    let tangency = xi.get(a).clone() * xi.get(b).clone();
    let quad = pt.eval(if case == 0 {
        &lits.quad_i
    } else {
        &lits.quad_ii
    });
    let c = pt.eval(&lits.c_case[case][0]);
    let c0 = pt.eval(&lits.c_case[case][1]);

    let mut report = CriterionReport::new("factorization", mode);
    report
        .notes
        .push(format!("case {}", if case == 0 { "i" } else { "ii" }));
    report.param("p", cfg.p.clone());
    report.param("X", cfg.x.clone());
    report.param("X0", cfg.x0.clone());
    report.param("C", c.clone());
    report.param("C0", c0.clone());
    report.residual(format!("xi{a}*xi{b}"), tangency);
    report.residual("quadratic", quad);
    if let Some(k) = cfg.vanishing {
        report.residual(format!("xi{k}"), xi.get(k).clone());
    }

    let diff = kippenhahn_poly(xi).poly - factored(cfg, &c, &c0);
    for j in 0..=3 {
        for i in 0..=3 - j {
            report.residual(format!("z{j}r{i}"), diff.coeff(j).coeff(i));
        }
    }
    let e = EllipseSpec::new(cfg.p.clone(), cfg.x.clone(), c.clone());
    report.ellipses.push(e.clone());
    report.ellipses.push(e.mirrored());
    report
        .ellipses
        .push(EllipseSpec::origin(cfg.x0.clone(), c0.clone()));
    report.decide(&[c, c0]);
    if report.verdict.holds() {
        report
            .notes
            .push("the origin is an isolated point of the curve".into());
    }
    Ok(report)
}
