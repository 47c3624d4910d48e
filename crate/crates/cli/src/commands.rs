//! Command implementations. Every command prints or writes pretty JSON (CSV for
//! `sample`) with deterministic field order.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use klab_core::algebra::Scalar;
use klab_core::criteria::{
    classify_with, concentric_check, factorization_check_n7, origin_ellipse_check,
    paper_catalog_n7, shifted_pair_residuals, CheckOptions, Classification,
};
use klab_core::curve::{
    cross_check, default_grid, render_svg, sample_curve, verify_conics, write_csv, Agreement,
};
use klab_core::reciprocal::{matrix_from_xi, XiVector};

use crate::args::{Command, XiArgs};
use crate::figures::figure;
use crate::CliError;

pub fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Classify {
            input,
            verify,
            grid,
            out,
        } => classify(&input, verify, grid, out.as_deref()),
        Command::Reproduce { figure, grid, out } => reproduce(figure, grid, &out),
        Command::Catalog { out } => catalog(out.as_deref()),
        Command::Sample { input, grid, out } => sample(&input, grid, out.as_deref()),
        Command::CheckOrigin { input, k, out } => {
            let (xi, opts) = read_input(&input)?;
            let ks: Vec<usize> = match k {
                Some(k) => vec![k],
                None => (1..=xi.m()).collect(),
            };
            let reports = ks
                .into_iter()
                .map(|k| origin_ellipse_check(&xi, k, opts))
                .collect::<Result<Vec<_>, _>>()?;
            emit(
                &json!({"command": "check-origin", "xi": xi, "reports": reports}),
                out.as_deref(),
            )
        }
        Command::CheckConcentric { input, out } => {
            let (xi, opts) = read_input(&input)?;
            let report = concentric_check(&xi, opts)?;
            emit(
                &json!({"command": "check-concentric", "xi": xi, "report": report}),
                out.as_deref(),
            )
        }
        Command::CheckShifted { input, p, x, out } => {
            let (xi, opts) = read_input(&input)?;
            let p = parse_scalar("--p", &p)?;
            let x = parse_scalar("--x", &x)?;
            let report = shifted_pair_residuals(&xi, &p, &x, opts)?;
            emit(
                &json!({"command": "check-shifted", "xi": xi, "report": report}),
                out.as_deref(),
            )
        }
    }
}

fn parse_scalar(flag: &str, src: &str) -> Result<Scalar, CliError> {
    src.parse()
        .map_err(|e| CliError::Input(format!("{flag}: cannot parse {src:?}: {e}")))
}

fn read_input(args: &XiArgs) -> Result<(XiVector, CheckOptions), CliError> {
    let xi = match (&args.xi, &args.input) {
        (Some(list), None) => XiVector::parse(list, args.n, args.exact)?,
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
            let xi = XiVector::from_json(&text, args.exact)?;
            match args.n {
                Some(n) if n != xi.n() => {
                    return Err(CliError::Input(format!(
                        "--n {n} contradicts n = {} in the input file",
                        xi.n()
                    )))
                }
                _ => xi,
            }
        }
        _ => {
            return Err(CliError::Input(
                "exactly one of --xi or --input is required".into(),
            ))
        }
    };
    if let Some(t) = args.tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(CliError::Input(format!("--tol must be positive, got {t}")));
        }
    }
    let opts = CheckOptions {
        tol: args.tol,
        approximate: false,
    };
    Ok((xi, opts))
}

fn check_grid(grid: usize) -> Result<Vec<f64>, CliError> {
    if grid < 4 {
        return Err(CliError::Input(format!(
            "--grid must be at least 4, got {grid}"
        )));
    }
    Ok(default_grid(grid))
}

fn emit<T: Serialize>(value: &T, out: Option<&Path>) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn verify(xi: &XiVector, c: &Classification, grid: &[f64]) -> Result<Agreement, CliError> {
    let samples = sample_curve(&matrix_from_xi(xi, None)?, grid)?;
    Ok(cross_check(c, &samples)?)
}

fn classify(
    input: &XiArgs,
    verify_curve: bool,
    grid: usize,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let (xi, opts) = read_input(input)?;
    let c = classify_with(&xi, opts)?;
    let mut doc = json!({"command": "classify", "xi": xi, "classification": c});
    let mut agrees = true;
    if verify_curve {
        let a = verify(&xi, &c, &check_grid(grid)?)?;
        agrees = a.agrees;
        doc["verification"] = serde_json::to_value(&a)?;
    }
    emit(&doc, out)?;
    if agrees {
        Ok(())
    } else {
        Err(CliError::Disagreement(
            "classification is not confirmed by the sampled curve".into(),
        ))
    }
}

fn reproduce(index: u8, grid: usize, out: &Path) -> Result<(), CliError> {
    let fig = figure(index);
    let grid = check_grid(grid)?;
    let opts = match &fig.entry {
        Some(e) if e.approximate => CheckOptions::approximate(),
        _ => CheckOptions::default(),
    };
    let c = classify_with(&fig.xi, opts)?;
    let samples = sample_curve(&matrix_from_xi(&fig.xi, None)?, &grid)?;
    let agreement = cross_check(&c, &samples)?;
    let mut problems = agreement.problems.clone();

    let mut doc = json!({
        "command": "reproduce",
        "figure": index,
        "title": fig.title,
        "xi": fig.xi,
        "classification": c,
        "verification": agreement,
    });
    if let Some(entry) = &fig.entry {
        let report = factorization_check_n7(&entry.xi, &entry.config, opts)?;
        if !report.verdict.holds() {
            problems.push("catalogue factorization fails".into());
        }
        doc["catalog"] = json!({"entry": entry, "factorization": report});
    }

    fs::create_dir_all(out)?;
    let verification = verify_conics(&samples, &c.ellipses)?;
    let svg = render_svg(
        &samples,
        Some(&verification),
        &format!("Figure {index}: {}", fig.title),
    );
    fs::write(out.join(format!("fig{index}.svg")), svg)?;
    emit(&doc, Some(&out.join(format!("fig{index}.json"))))?;
    emit(&doc, None)?;
    if problems.is_empty() {
        Ok(())
    } else {
        Err(CliError::Disagreement(problems.join("; ")))
    }
}

fn catalog(out: Option<&Path>) -> Result<(), CliError> {
    let mut entries: Vec<Value> = Vec::new();
    let mut failures = Vec::new();
    for entry in paper_catalog_n7() {
        let opts = if entry.approximate {
            CheckOptions::approximate()
        } else {
            CheckOptions::default()
        };
        let report = factorization_check_n7(&entry.xi, &entry.config, opts)?;
        let verified = report.verdict.holds();
        if !verified {
            failures.push(format!("{:?} #{}", entry.theorem, entry.index));
        }
        entries.push(json!({
            "entry": entry,
            "verified": verified,
            "max_residual": klab_core::algebra::round_sig15(report.max_residual()),
            "factorization": report,
        }));
    }
    let doc = json!({"command": "catalog", "total": entries.len(), "entries": entries});
    emit(&doc, out)?;
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Disagreement(format!(
            "unverified entries: {}",
            failures.join(", ")
        )))
    }
}

fn sample(input: &XiArgs, grid: usize, out: Option<&Path>) -> Result<(), CliError> {
    let (xi, _) = read_input(input)?;
    let samples = sample_curve(&matrix_from_xi(&xi, None)?, &check_grid(grid)?)?;
    match out {
        Some(path) => write_csv(&samples, std::io::BufWriter::new(fs::File::create(path)?))?,
        None => write_csv(&samples, std::io::BufWriter::new(std::io::stdout().lock()))?,
    }
    Ok(())
}
