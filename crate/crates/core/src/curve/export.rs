//! CSV and SVG output for sampled curves.

use std::fmt::Write as _;
use std::io::{self, Write};

use crate::algebra::round_sig15;

use super::conic::ConicVerification;
use super::sample::CurveSample;

/// Writes `theta,branch,x,y,flag` rows; `flag` is `ok` or `unreliable`.
pub fn write_csv<W: Write>(samples: &[CurveSample], mut out: W) -> io::Result<()> {
    writeln!(out, "theta,branch,x,y,flag")?;
    for s in samples {
        writeln!(
            out,
            "{},{},{},{},{}",
            format_sig15(s.theta),
            s.branch,
            format_sig15(s.z.re),
            format_sig15(s.z.im),
            if s.reliable { "ok" } else { "unreliable" }
        )?;
    }
    Ok(())
}

/// Fifteen significant digits; scientific notation outside `[1e−4, 1e15)`.
fn format_sig15(v: f64) -> String {
    let r = round_sig15(v);
    if r == 0.0 || (1e-4..1e15).contains(&r.abs()) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

const STROKES: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];
const SIZE: f64 = 600.0;
const MARGIN: f64 = 30.0;

/// Renders the curve with equal axis scaling.
///
/// Each (spec, branch) run of assigned samples becomes a polyline stroked by spec;
/// unassigned samples are drawn as dots.
pub fn render_svg(
    samples: &[CurveSample],
    verification: Option<&ConicVerification>,
    title: &str,
) -> String {
    let extent = samples
        .iter()
        .filter(|s| s.z.re.is_finite() && s.z.im.is_finite())
        .fold(0.0f64, |m, s| m.max(s.z.re.abs()).max(s.z.im.abs()))
        .max(1e-9)
        * 1.05;
    let scale = (SIZE / 2.0 - MARGIN) / extent;
    let px = |x: f64| SIZE / 2.0 + x * scale;
    let py = |y: f64| SIZE / 2.0 - y * scale;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(svg, "<title>{}</title>", escape(title));
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r##"<g stroke="#999" stroke-width="0.5"><line x1="{MARGIN}" y1="{c}" x2="{e}" y2="{c}"/><line x1="{c}" y1="{MARGIN}" x2="{c}" y2="{e}"/></g>"##,
        c = SIZE / 2.0,
        e = SIZE - MARGIN
    );

    let assignment = verification.map(|v| v.assignment.as_slice());
    let branches = samples.iter().map(|s| s.branch).max().unwrap_or(0);
    let spec_count = verification.map_or(0, |v| v.fits.len());
    for k in 0..spec_count {
        let stroke = STROKES[k % STROKES.len()];
        for b in 1..=branches {
            let mut runs: Vec<Vec<(f64, f64)>> = vec![Vec::new()];
            for (i, s) in samples.iter().enumerate().filter(|(_, s)| s.branch == b) {
                if assignment.and_then(|a| a[i]) == Some(k) {
                    runs.last_mut().unwrap().push((px(s.z.re), py(s.z.im)));
                } else if !runs.last().unwrap().is_empty() {
                    runs.push(Vec::new());
                }
            }
            for run in runs.iter().filter(|r| r.len() > 1) {
                let points: Vec<String> =
                    run.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
                let _ = writeln!(
                    svg,
                    r#"<polyline fill="none" stroke="{stroke}" stroke-width="1.2" points="{}"/>"#,
                    points.join(" ")
                );
            }
        }
    }

    let _ = writeln!(svg, r##"<g fill="#222">"##);
    for (i, s) in samples.iter().enumerate() {
        if assignment.and_then(|a| a[i]).is_none() && s.reliable {
            let _ = writeln!(
                svg,
                r#"<circle cx="{:.2}" cy="{:.2}" r="0.8"/>"#,
                px(s.z.re),
                py(s.z.im)
            );
        }
    }
    let _ = writeln!(svg, "</g>");
    svg.push_str("</svg>\n");
    svg
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Scalar;
    use crate::criteria::EllipseSpec;
    use crate::curve::{default_grid, sample_curve, verify_conics};
    use crate::reciprocal::{matrix_from_xi, XiVector};

    fn figure_one() -> Vec<CurveSample> {
        let xi = XiVector::from_ints(&[1, 4, 1, 1, 2, 3]).unwrap();
        sample_curve(&matrix_from_xi(&xi, None).unwrap(), &default_grid(16)).unwrap()
    }

    #[test]
    fn small_values_use_exponents() {
        assert_eq!(format_sig15(1.5), "1.5");
        assert_eq!(format_sig15(-1.96e-17), "-1.96e-17");
        assert_eq!(format_sig15(0.0), "0");
    }

    #[test]
    fn csv_has_header_and_one_row_per_sample() {
        let samples = figure_one();
        let mut buf = Vec::new();
        write_csv(&samples, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "theta,branch,x,y,flag");
        assert_eq!(lines.len(), samples.len() + 1);
        assert!(lines[1..].iter().all(|l| l.split(',').count() == 5));
    }

    #[test]
    fn svg_has_polylines_and_dots() {
        let samples = figure_one();
        let spec = EllipseSpec::origin(Scalar::sqrt2(0, 1), Scalar::int(5));
        let v = verify_conics(&samples, &[spec]).unwrap();
        let svg = render_svg(&samples, Some(&v), "a < b");
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains("<polyline"));
        assert!(svg.contains("<circle"));
        assert!(svg.contains("a &lt; b"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }
}
