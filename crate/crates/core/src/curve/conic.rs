//! Point-wise assignment of curve samples to candidate ellipses.

use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::round_sig15;
use crate::criteria::EllipseSpec;

use super::sample::CurveSample;
use super::CurveError;

/// Samples with a smaller residual than this are assigned to a spec.
pub const ASSIGN_TOL: f64 = 1e-6;

/// Floating-point geometry of an admissible ellipse or focal segment.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Conic {
    pub center: f64,
    pub half_focal: f64,
    pub minor_sq: f64,
}

impl Conic {
    /// Rejects conics whose foci coincide (`X ≤ 0`) and negative `C`.
    pub fn from_spec(spec: &EllipseSpec) -> Result<Self, CurveError> {
        let conic = Conic {
            center: spec.center.to_f64(),
            half_focal: spec.half_focal.to_f64(),
            minor_sq: spec.minor_sq.to_f64(),
        };
        if !(conic.half_focal > 0.0) {
            return Err(CurveError::InvalidSpec(format!(
                "half focal distance must be positive, got {}",
                conic.half_focal
            )));
        }
        if !(conic.minor_sq >= 0.0) {
            return Err(CurveError::InvalidSpec(format!(
                "squared minor half-axis must be nonnegative, got {}",
                conic.minor_sq
            )));
        }
        Ok(conic)
    }

    /// `|(x−p)²/(C+X²) + y²/C − 1|`, or the distance to the focal segment when `C = 0`.
    pub fn residual(&self, z: Complex64) -> f64 {
        let dx = z.re - self.center;
        if self.minor_sq == 0.0 {
            let outside = (dx.abs() - self.half_focal).max(0.0);
            return outside.hypot(z.im);
        }
        let major_sq = self.minor_sq + self.half_focal * self.half_focal;
        (dx * dx / major_sq + z.im * z.im / self.minor_sq - 1.0).abs()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConicFit {
    pub spec: EllipseSpec,
    /// Largest residual among the assigned samples, 0 when none are assigned.
    pub max_residual: f64,
    pub assigned: usize,
}

impl Serialize for ConicFit {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("ConicFit", 3)?;
        s.serialize_field("spec", &self.spec)?;
        s.serialize_field("max_residual", &round_sig15(self.max_residual))?;
        s.serialize_field("assigned", &self.assigned)?;
        s.end()
    }
}

/// Result of [`verify_conics`].
#[derive(Clone, Debug, PartialEq)]
pub struct ConicVerification {
    pub fits: Vec<ConicFit>,
    /// Spec index for each sample; `None` for leftovers and unreliable samples.
    pub assignment: Vec<Option<usize>>,
    /// Indices of reliable samples not on any spec.
    pub leftover: Vec<usize>,
    pub unreliable: usize,
}

impl ConicVerification {
    /// Largest residual over all fits.
    pub fn max_residual(&self) -> f64 {
        self.fits.iter().map(|f| f.max_residual).fold(0.0, f64::max)
    }

    pub fn assigned(&self) -> usize {
        self.fits.iter().map(|f| f.assigned).sum()
    }

    pub fn summary(&self, samples: &[CurveSample]) -> VerificationSummary {
        VerificationSummary {
            samples: samples.len(),
            unreliable: self.unreliable,
            assigned: self.assigned(),
            leftover: self.leftover.len(),
            leftover_off_origin: self
                .leftover
                .iter()
                .filter(|&&i| samples[i].z.norm() > ASSIGN_TOL)
                .count(),
            max_residual: round_sig15(self.max_residual()),
            fits: self.fits.clone(),
        }
    }
}

/// Serializable digest of a verification run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationSummary {
    pub samples: usize,
    pub unreliable: usize,
    pub assigned: usize,
    pub leftover: usize,
    /// Leftovers other than the origin point of odd-size matrices.
    pub leftover_off_origin: usize,
    pub max_residual: f64,
    pub fits: Vec<ConicFit>,
}

/// Smallest residual of `z` against any of `conics`.
pub fn min_residual(conics: &[Conic], z: Complex64) -> f64 {
    conics
        .iter()
        .map(|c| c.residual(z))
        .fold(f64::INFINITY, f64::min)
}

pub fn verify_conics(
    samples: &[CurveSample],
    specs: &[EllipseSpec],
) -> Result<ConicVerification, CurveError> {
    verify_conics_with(samples, specs, ASSIGN_TOL)
}

/// Assigns each reliable sample to its minimum-residual spec when that residual is
/// below `tol`; everything else goes to the leftover bucket.
pub fn verify_conics_with(
    samples: &[CurveSample],
    specs: &[EllipseSpec],
    tol: f64,
) -> Result<ConicVerification, CurveError> {
    let conics = specs
        .iter()
        .map(Conic::from_spec)
        .collect::<Result<Vec<_>, _>>()?;
    let mut fits: Vec<ConicFit> = specs
        .iter()
        .map(|s| ConicFit {
            spec: s.clone(),
            max_residual: 0.0,
            assigned: 0,
        })
        .collect();
    let mut assignment = Vec::with_capacity(samples.len());
    let mut leftover = Vec::new();
    let mut unreliable = 0;
    for (i, s) in samples.iter().enumerate() {
        if !s.reliable {
            unreliable += 1;
            assignment.push(None);
            continue;
        }
        let best = conics
            .iter()
            .map(|c| c.residual(s.z))
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(&b.1));
        match best {
            Some((k, r)) if r < tol => {
                let fit = &mut fits[k];
                fit.assigned += 1;
                fit.max_residual = fit.max_residual.max(r);
                assignment.push(Some(k));
            }
            _ => {
                leftover.push(i);
                assignment.push(None);
            }
        }
    }
    Ok(ConicVerification {
        fits,
        assignment,
        leftover,
        unreliable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Scalar;
    use crate::curve::sample::{default_grid, sample_curve};
    use crate::reciprocal::{matrix_from_xi, XiVector};

    fn circle_samples() -> Vec<CurveSample> {
        default_grid(32)
            .into_iter()
            .map(|t| CurveSample {
                theta: t,
                branch: 1,
                z: Complex64::from_polar(1.0, t),
                lambda: 1.0,
                lambda_prime: 0.0,
                reliable: true,
            })
            .collect()
    }

    #[test]
    fn circle_spec_is_rejected() {
        let spec = EllipseSpec::origin(Scalar::int(0), Scalar::int(1));
        assert!(matches!(
            verify_conics(&circle_samples(), &[spec]),
            Err(CurveError::InvalidSpec(_))
        ));
        let negative = EllipseSpec::origin(Scalar::int(1), Scalar::int(-1));
        assert!(verify_conics(&circle_samples(), &[negative]).is_err());
    }

    #[test]
    fn segment_residual_is_distance() {
        let c = Conic {
            center: 1.0,
            half_focal: 2.0,
            minor_sq: 0.0,
        };
        assert_eq!(c.residual(Complex64::new(2.0, 0.0)), 0.0);
        assert!((c.residual(Complex64::new(4.0, 0.0)) - 1.0).abs() < 1e-15);
        assert!((c.residual(Complex64::new(0.0, 0.5)) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn figure_one_middle_component() {
        let xi = XiVector::from_ints(&[1, 4, 1, 1, 2, 3]).unwrap();
        let a = matrix_from_xi(&xi, None).unwrap();
        let samples = sample_curve(&a, &default_grid(512)).unwrap();
        let spec = EllipseSpec::origin(Scalar::sqrt2(0, 1), Scalar::int(5));
        let v = verify_conics(&samples, &[spec]).unwrap();
        assert!(v.max_residual() < 1e-8, "{}", v.max_residual());
        for (s, a) in samples.iter().zip(&v.assignment) {
            let middle = s.branch == 2 || s.branch == 6;
            assert_eq!(a.is_some(), middle, "{s:?}");
        }
    }
}
