//! Verdicts, residual evidence and ellipse descriptions shared by all criteria.

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::algebra::{round_sig15, Ring, Scalar};

/// Default numeric threshold factor: a residual vanishes when
/// `|r| < NUMERIC_TOL · (1 + ‖ξ‖∞)^m`.
pub const NUMERIC_TOL: f64 = 1e-8;

/// Threshold for inputs known only to six significant digits.
pub const APPROXIMATE_TOL: f64 = 1e-4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    HoldsDegenerately,
    Fails,
}

impl Verdict {
    pub fn holds(self) -> bool {
        self != Verdict::Fails
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Numeric { tolerance: f64, approximate: bool },
}

impl Mode {
    pub fn is_exact(&self) -> bool {
        matches!(self, Mode::Exact)
    }

    pub fn is_zero(&self, r: &Scalar) -> bool {
        match self {
            Mode::Exact if r.is_exact() => r.is_zero(),
            Mode::Exact => r.to_f64() == 0.0,
            Mode::Numeric { tolerance, .. } => r.to_f64().abs() <= *tolerance,
        }
    }

    pub fn is_nonnegative(&self, c: &Scalar) -> bool {
        match self {
            Mode::Exact => c.signum() >= 0,
            Mode::Numeric { tolerance, .. } => c.to_f64() >= -tolerance,
        }
    }
}

/// How a criterion should treat inexact input.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct CheckOptions {
    /// Overrides the default numeric threshold.
    pub tol: Option<f64>,
    /// The input is a six-digit approximation; use the relaxed threshold.
    pub approximate: bool,
}

impl CheckOptions {
    pub fn approximate() -> Self {
        CheckOptions {
            tol: None,
            approximate: true,
        }
    }

    /// Exact when every input is exact, otherwise numeric with a scale-aware threshold.
    pub fn mode(&self, exact: bool, sup_norm: f64, m: usize) -> Mode {
        if exact && !self.approximate {
            return Mode::Exact;
        }
        let tolerance = match (self.tol, self.approximate) {
            (Some(t), _) => t,
            (None, true) => APPROXIMATE_TOL,
            (None, false) => NUMERIC_TOL * (1.0 + sup_norm).powi(m as i32),
        };
        Mode::Numeric {
            tolerance,
            approximate: self.approximate,
        }
    }
}

/// One conic component: center `p` on the real axis, half focal distance `X`,
/// squared minor half-axis `C`.
#[derive(Clone, Debug, PartialEq)]
pub struct EllipseSpec {
    pub center: Scalar,
    pub half_focal: Scalar,
    pub minor_sq: Scalar,
}

impl EllipseSpec {
    pub fn new(center: Scalar, half_focal: Scalar, minor_sq: Scalar) -> Self {
        EllipseSpec {
            center,
            half_focal,
            minor_sq,
        }
    }

    pub fn origin(half_focal: Scalar, minor_sq: Scalar) -> Self {
        EllipseSpec::new(Scalar::int(0), half_focal, minor_sq)
    }

    /// `C + X²`.
    pub fn major_sq(&self) -> Scalar {
        self.minor_sq.clone() + self.half_focal.clone() * self.half_focal.clone()
    }

    pub fn foci(&self) -> (Scalar, Scalar) {
        (
            self.center.clone() - self.half_focal.clone(),
            self.center.clone() + self.half_focal.clone(),
        )
    }

    /// `C = 0`: the ellipse collapses onto its focal segment.
    pub fn is_degenerate(&self) -> bool {
        self.minor_sq.is_zero()
    }

    /// `(p, X, C)` in floating point.
    pub fn approx(&self) -> [f64; 3] {
        [
            self.center.to_f64(),
            self.half_focal.to_f64(),
            self.minor_sq.to_f64(),
        ]
    }

    /// Reflection through the imaginary axis.
    pub fn mirrored(&self) -> Self {
        EllipseSpec::new(
            -self.center.clone(),
            self.half_focal.clone(),
            self.minor_sq.clone(),
        )
    }
}

impl Serialize for EllipseSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("EllipseSpec", 5)?;
        s.serialize_field("center", &self.center)?;
        s.serialize_field("half_focal", &self.half_focal)?;
        s.serialize_field("minor_sq", &self.minor_sq)?;
        s.serialize_field(
            "approx",
            &[
                round_sig15(self.center.to_f64()),
                round_sig15(self.half_focal.to_f64()),
                round_sig15(self.minor_sq.to_f64()),
            ],
        )?;
        s.serialize_field("degenerate", &self.is_degenerate())?;
        s.end()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Residual {
    pub label: String,
    pub value: Scalar,
}

impl Serialize for Residual {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Residual", 3)?;
        s.serialize_field("label", &self.label)?;
        s.serialize_field("value", &self.value)?;
        s.serialize_field("magnitude", &round_sig15(self.value.to_f64().abs()))?;
        s.end()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Parameter {
    pub name: String,
    pub value: Scalar,
}

impl Serialize for Parameter {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Parameter", 3)?;
        s.serialize_field("name", &self.name)?;
        s.serialize_field("value", &self.value)?;
        s.serialize_field("approx", &round_sig15(self.value.to_f64()))?;
        s.end()
    }
}

/// Outcome of one criterion together with the evidence behind it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriterionReport {
    pub criterion: String,
    pub verdict: Verdict,
    pub mode: Mode,
    pub parameters: Vec<Parameter>,
    pub residuals: Vec<Residual>,
    pub ellipses: Vec<EllipseSpec>,
    pub notes: Vec<String>,
}

impl CriterionReport {
    pub fn new(criterion: &str, mode: Mode) -> Self {
        CriterionReport {
            criterion: criterion.to_string(),
            verdict: Verdict::Fails,
            mode,
            parameters: Vec::new(),
            residuals: Vec::new(),
            ellipses: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn param(&mut self, name: &str, value: Scalar) {
        self.parameters.push(Parameter {
            name: name.to_string(),
            value,
        });
    }

    pub fn residual(&mut self, label: impl Into<String>, value: Scalar) {
        self.residuals.push(Residual {
            label: label.into(),
            value,
        });
    }

    pub fn parameter(&self, name: &str) -> Option<&Scalar> {
        self.parameters
            .iter()
            .find(|p| p.name == name)
            .map(|p| &p.value)
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals
            .iter()
            .map(|r| r.value.to_f64().abs())
            .fold(0.0, f64::max)
    }

    pub fn residuals_vanish(&self) -> bool {
        self.residuals.iter().all(|r| self.mode.is_zero(&r.value))
    }

    /// Sets the verdict from the residuals and the squared minor axes that must be nonnegative.
    pub fn decide(&mut self, minor_sq: &[Scalar]) {
        self.verdict = if !self.residuals_vanish() {
            Verdict::Fails
        } else if let Some(c) = minor_sq.iter().find(|c| !self.mode.is_nonnegative(c)) {
            self.notes
                .push(format!("negative squared minor half-axis {c}"));
            Verdict::Fails
        } else if minor_sq.iter().any(|c| self.mode.is_zero(c)) {
            Verdict::HoldsDegenerately
        } else {
            Verdict::Holds
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_mode_needs_exact_zero() {
        let mut r = CriterionReport::new("t", Mode::Exact);
        r.residual("a", Scalar::int(0));
        r.decide(&[Scalar::int(1)]);
        assert_eq!(r.verdict, Verdict::Holds);
        r.residual("b", Scalar::ratio(1, 1_000_000_000_000));
        r.decide(&[Scalar::int(1)]);
        assert_eq!(r.verdict, Verdict::Fails);
    }

    #[test]
    fn degenerate_and_negative_minor_axes() {
        let mut r = CriterionReport::new("t", Mode::Exact);
        r.decide(&[Scalar::int(0), Scalar::int(2)]);
        assert_eq!(r.verdict, Verdict::HoldsDegenerately);
        r.decide(&[Scalar::int(-1)]);
        assert_eq!(r.verdict, Verdict::Fails);
    }

    #[test]
    fn numeric_threshold_scales() {
        let opts = CheckOptions::default();
        match opts.mode(false, 1.0, 3) {
            Mode::Numeric { tolerance, .. } => assert!((tolerance - 8e-8).abs() < 1e-20),
            _ => panic!(),
        }
        assert_eq!(opts.mode(true, 1.0, 3), Mode::Exact);
        assert!(matches!(
            CheckOptions::approximate().mode(true, 1.0, 3),
            Mode::Numeric {
                approximate: true,
                ..
            }
        ));
    }

    #[test]
    fn json_shape() {
        let mut r = CriterionReport::new("origin", Mode::Exact);
        r.param("C", Scalar::int(5));
        r.ellipses
            .push(EllipseSpec::origin(Scalar::sqrt2(0, 1), Scalar::int(5)));
        r.decide(&[Scalar::int(5)]);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["verdict"], "holds");
        assert_eq!(v["mode"]["kind"], "exact");
        assert_eq!(v["parameters"][0]["value"]["rational"], "5");
        assert_eq!(v["ellipses"][0]["half_focal"]["sqrt2"][1], "1");
    }
}
