//! Runs every criterion on one `ξ` and summarises which elliptic components the
//! curve has.

use serde::Serialize;

use crate::reciprocal::XiVector;

use super::concentric::concentric_check;
use super::factorization::{factorization_check_n7, ShiftedPairConfig};
use super::origin::origin_ellipse_check;
use super::report::{CheckOptions, CriterionReport, EllipseSpec, Mode};
use super::shifted::{admissible_pairs, shifted_pair_residuals};
use super::CriteriaError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassificationKind {
    NoEllipses,
    OriginEllipses,
    AllConcentric,
    ShiftedPair,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Classification {
    pub n: usize,
    pub kind: ClassificationKind,
    /// The elliptic components found, degenerate ones included.
    pub ellipses: Vec<EllipseSpec>,
    /// Odd `n` puts the origin on the curve.
    pub origin_point: bool,
    pub mode: Mode,
    /// Every report consulted, in evaluation order.
    pub reports: Vec<CriterionReport>,
}

impl Classification {
    /// Focus indices `k` of the origin-centred ellipses found.
    pub fn origin_indices(&self) -> Vec<usize> {
        self.reports
            .iter()
            .filter(|r| r.criterion == "origin" && r.verdict.holds())
            .filter_map(|r| r.parameter("k").map(|k| k.to_f64() as usize))
            .collect()
    }
}

pub fn classify(xi: &XiVector) -> Result<Classification, CriteriaError> {
    classify_with(xi, CheckOptions::default())
}

/// Origin ellipses are enumerated first: a shifted pair always comes with one.
pub fn classify_with(xi: &XiVector, opts: CheckOptions) -> Result<Classification, CriteriaError> {
    let (n, m) = (xi.n(), xi.m());
    let mut reports = Vec::new();
    let mut origin = Vec::new();
    for k in 1..=m {
        let r = origin_ellipse_check(xi, k, opts)?;
        if r.verdict.holds() {
            origin.extend(r.ellipses.iter().cloned());
        }
        reports.push(r);
    }
    let mode = reports
        .first()
        .map_or_else(|| opts.mode(xi.is_exact(), xi.sup_norm(), m), |r| r.mode);

    let concentric = concentric_check(xi, opts)?;
    let all_concentric = concentric.verdict.holds();
    let concentric_ellipses = concentric.ellipses.clone();
    reports.push(concentric);

    let (kind, ellipses) = if all_concentric {
        (ClassificationKind::AllConcentric, concentric_ellipses)
    } else if let Some(pair) = find_pair(xi, opts, &origin, &mut reports)? {
        (ClassificationKind::ShiftedPair, pair)
    } else if !origin.is_empty() {
        (ClassificationKind::OriginEllipses, origin)
    } else {
        (ClassificationKind::NoEllipses, Vec::new())
    };
    Ok(Classification {
        n,
        kind,
        ellipses,
        origin_point: n % 2 == 1,
        mode,
        reports,
    })
}

fn find_pair(
    xi: &XiVector,
    opts: CheckOptions,
    origin: &[EllipseSpec],
    reports: &mut Vec<CriterionReport>,
) -> Result<Option<Vec<EllipseSpec>>, CriteriaError> {
    for pair in admissible_pairs(xi.n()) {
        let r = shifted_pair_residuals(xi, &pair.p, &pair.x, opts)?;
        let holds = r.verdict.holds();
        let mut ellipses = r.ellipses.clone();
        reports.push(r);
        if !holds {
            continue;
        }
        // The companion origin ellipse uses the remaining focus.
        let used = [pair.f_plus.to_f64().abs(), pair.f_minus.to_f64().abs()];
        ellipses.extend(
            origin
                .iter()
                .filter(|e| {
                    used.iter()
                        .all(|u| (e.half_focal.to_f64() - u).abs() > 1e-9)
                })
                .cloned(),
        );
        if xi.n() == 7 && !pair.same_side() {
            let x0 = origin
                .iter()
                .map(|e| e.half_focal.clone())
                .find(|h| used.iter().all(|u| (h.to_f64() - u).abs() > 1e-9));
            if let Some(x0) = x0 {
                let cfg =
                    ShiftedPairConfig::from_foci(pair.f_plus.clone(), pair.f_minus.clone(), x0);
                reports.push(factorization_check_n7(xi, &cfg, opts)?);
            }
        }
        return Ok(Some(ellipses));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Scalar;

    #[test]
    fn figure_one() {
        let xi = XiVector::from_ints(&[1, 4, 1, 1, 2, 3]).unwrap();
        let c = classify(&xi).unwrap();
        assert_eq!(c.kind, ClassificationKind::OriginEllipses);
        assert_eq!(c.origin_indices(), vec![2]);
        assert_eq!(c.ellipses.len(), 1);
        assert_eq!(c.ellipses[0].half_focal, Scalar::sqrt2(0, 1));
        assert_eq!(c.ellipses[0].minor_sq, Scalar::int(5));
    }

    #[test]
    fn figure_two() {
        let xi = XiVector::from_ints(&[1, 1, 2, 0, 1, 1]).unwrap();
        let c = classify(&xi).unwrap();
        assert_eq!(c.kind, ClassificationKind::AllConcentric);
        assert_eq!(c.ellipses.len(), 3);
    }

    #[test]
    fn shifted_pair_found() {
        let xi = XiVector::parse("sqrt2+1, 0, sqrt2+1, 0, sqrt2-1, 2", None, true).unwrap();
        let c = classify(&xi).unwrap();
        assert_eq!(c.kind, ClassificationKind::ShiftedPair);
        assert_eq!(c.ellipses.len(), 3);
        let fact = c
            .reports
            .iter()
            .find(|r| r.criterion == "factorization")
            .unwrap();
        assert!(fact.verdict.holds());
    }

    #[test]
    fn constant_xi_is_concentric() {
        let xi = XiVector::from_ints(&[1; 6]).unwrap();
        let c = classify(&xi).unwrap();
        assert_eq!(c.kind, ClassificationKind::AllConcentric);
        let cs: Vec<Scalar> = c.ellipses.iter().map(|e| e.minor_sq.clone()).collect();
        assert_eq!(
            cs,
            vec![Scalar::sqrt2(2, 1), Scalar::int(2), Scalar::sqrt2(2, -1)]
        );
    }

    #[test]
    fn increasing_xi_has_no_ellipses() {
        let xi = XiVector::from_ints(&[1, 2, 3, 4, 5, 6]).unwrap();
        let c = classify(&xi).unwrap();
        assert_eq!(c.kind, ClassificationKind::NoEllipses);
        assert!(c.ellipses.is_empty());
    }
}
