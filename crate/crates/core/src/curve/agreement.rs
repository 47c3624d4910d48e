//! Cross-checks a symbolic classification against the sampled curve.
//!
//! Claimed ellipses must carry samples with small residual. Rejected candidates
//! must not contain a whole sampled branch.

use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::round_sig15;
use crate::criteria::{Classification, EllipseSpec};

use super::conic::{verify_conics, Conic, VerificationSummary, ASSIGN_TOL};
use super::sample::CurveSample;
use super::CurveError;

/// Largest residual tolerated on a claimed ellipse.
pub const AGREEMENT_TOL: f64 = 1e-7;

/// A candidate ellipse some criterion rejected.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RejectedCandidate {
    pub criterion: String,
    pub spec: EllipseSpec,
    /// Over all branches, the smallest worst-case residual: how close any whole
    /// branch comes to lying on the candidate.
    pub best_branch_residual: f64,
    /// A branch lying on it entirely, which contradicts the rejection.
    pub branch_on_conic: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Agreement {
    pub agrees: bool,
    pub tolerance: f64,
    pub verification: VerificationSummary,
    pub rejected: Vec<RejectedCandidate>,
    pub problems: Vec<String>,
}

fn same_spec(a: &EllipseSpec, b: &EllipseSpec) -> bool {
    let close = |x: f64, y: f64| (x - y).abs() <= 1e-9 * (1.0 + x.abs().max(y.abs()));
    close(a.center.to_f64(), b.center.to_f64())
        && close(a.half_focal.to_f64(), b.half_focal.to_f64())
        && close(a.minor_sq.to_f64(), b.minor_sq.to_f64())
}

/// Worst residual of each branch against `conic`, over reliable samples.
///
/// A branch pinned to the origin (the odd-size eigenvalue 0) is a point, not a
/// component, and is skipped.
fn branch_residuals(conic: &Conic, samples: &[CurveSample]) -> Vec<(usize, f64)> {
    let branches = samples.iter().map(|s| s.branch).max().unwrap_or(0);
    (1..=branches)
        .filter(|&b| {
            samples
                .iter()
                .any(|s| s.branch == b && s.reliable && s.z.norm() > ASSIGN_TOL)
        })
        .filter_map(|b| {
            samples
                .iter()
                .filter(|s| s.branch == b && s.reliable)
                .map(|s| conic.residual(s.z))
                .reduce(f64::max)
                .map(|r| (b, r))
        })
        .collect()
}

pub fn cross_check(
    classification: &Classification,
    samples: &[CurveSample],
) -> Result<Agreement, CurveError> {
    let claimed = &classification.ellipses;
    let verification = verify_conics(samples, claimed)?;
    let mut problems = Vec::new();
    for fit in &verification.fits {
        // Nested focal segments tie, so count samples on the conic rather than assigned to it.
        let conic = Conic::from_spec(&fit.spec)?;
        let on_conic = samples
            .iter()
            .any(|s| s.reliable && conic.residual(s.z) < AGREEMENT_TOL);
        if !on_conic {
            problems.push(format!(
                "no sample lies on claimed ellipse {:?}",
                fit.spec.approx()
            ));
        } else if fit.max_residual >= AGREEMENT_TOL {
            problems.push(format!(
                "claimed ellipse {:?} has residual {:e}",
                fit.spec.approx(),
                fit.max_residual
            ));
        }
    }
    let leftover_off_origin = verification
        .leftover
        .iter()
        .filter(|&&i| samples[i].z.norm() > ASSIGN_TOL)
        .count();
    if classification.kind == crate::criteria::ClassificationKind::AllConcentric
        && leftover_off_origin > 0
    {
        problems.push(format!(
            "{leftover_off_origin} samples off the concentric ellipses"
        ));
    }

    let mut rejected: Vec<RejectedCandidate> = Vec::new();
    for report in classification.reports.iter().filter(|r| !r.verdict.holds()) {
        for spec in &report.ellipses {
            if claimed
                .iter()
                .chain(rejected.iter().map(|r| &r.spec))
                .any(|c| same_spec(c, spec))
            {
                continue;
            }
            let Ok(conic) = Conic::from_spec(spec) else {
                continue;
            };
            let per_branch = branch_residuals(&conic, samples);
            let best_branch_residual = per_branch.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
            let branch_on_conic = per_branch.iter().find(|p| p.1 < ASSIGN_TOL).map(|p| p.0);
            if let Some(b) = branch_on_conic {
                problems.push(format!(
                    "branch {b} lies on ellipse {:?} rejected by {}",
                    spec.approx(),
                    report.criterion
                ));
            }
            rejected.push(RejectedCandidate {
                criterion: report.criterion.clone(),
                spec: spec.clone(),
                best_branch_residual: round_sig15(best_branch_residual),
                branch_on_conic,
            });
        }
    }
    Ok(Agreement {
        agrees: problems.is_empty(),
        tolerance: AGREEMENT_TOL,
        verification: verification.summary(samples),
        rejected,
        problems,
    })
}

/// Largest distance from a sample's mirror images to the sample set, brute force.
pub fn symmetry_defect(samples: &[CurveSample]) -> f64 {
    let points: Vec<Complex64> = samples.iter().filter(|s| s.reliable).map(|s| s.z).collect();
    points
        .iter()
        .flat_map(|z| [z.conj(), -z, -z.conj()])
        .map(|w| {
            points
                .iter()
                .map(|p| (p - w).norm())
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::classify;
    use crate::curve::{default_grid, sample_curve};
    use crate::reciprocal::{matrix_from_xi, XiVector};

    fn run(xi: &XiVector) -> Agreement {
        let c = classify(xi).unwrap();
        let s = sample_curve(&matrix_from_xi(xi, None).unwrap(), &default_grid(256)).unwrap();
        cross_check(&c, &s).unwrap()
    }

    #[test]
    fn zero_xi_segments_agree() {
        let a = run(&XiVector::from_ints(&[0; 6]).unwrap());
        assert!(a.agrees, "{:?}", a.problems);
    }

    #[test]
    fn figure_one_agrees() {
        let a = run(&XiVector::from_ints(&[1, 4, 1, 1, 2, 3]).unwrap());
        assert!(a.agrees, "{:?}", a.problems);
        assert!(a.rejected.iter().all(|r| r.best_branch_residual > 1e-4));
    }

    #[test]
    fn claimed_ellipse_off_the_curve_disagrees() {
        let xi = XiVector::from_ints(&[1, 4, 1, 1, 2, 3]).unwrap();
        let mut c = classify(&xi).unwrap();
        c.ellipses[0].minor_sq = crate::algebra::Scalar::int(6);
        let s = sample_curve(&matrix_from_xi(&xi, None).unwrap(), &default_grid(64)).unwrap();
        assert!(!cross_check(&c, &s).unwrap().agrees);
    }

    #[test]
    fn symmetric_grid_gives_symmetric_samples() {
        let xi = XiVector::from_ints(&[1, 4, 1, 1, 2, 3]).unwrap();
        let s = sample_curve(&matrix_from_xi(&xi, None).unwrap(), &default_grid(64)).unwrap();
        assert!(symmetry_defect(&s) < 1e-8);
    }
}
