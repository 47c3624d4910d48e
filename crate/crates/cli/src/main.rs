//! `klab`: classify reciprocal tridiagonal matrices by the elliptical components
//! of their Kippenhahn curves.

mod args;
mod commands;
mod figures;

use std::process::ExitCode;

use clap::Parser;
use thiserror::Error;

use args::Cli;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Reciprocal(#[from] klab_core::reciprocal::ReciprocalError),
    #[error(transparent)]
    Criteria(#[from] klab_core::criteria::CriteriaError),
    #[error(transparent)]
    Curve(#[from] klab_core::curve::CurveError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
    /// The symbolic verdict and the sampled curve disagree.
    #[error("verification disagreement: {0}")]
    Disagreement(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Disagreement(_)
            | CliError::Criteria(klab_core::criteria::CriteriaError::Internal(_)) => 2,
            _ => 1,
        }
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("KLAB_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| {
            CliError::Input(format!(
                "KLAB_THREADS must be a positive integer, got {value:?}"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Input(format!("cannot configure threads: {e}")))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match configure_threads().and_then(|()| commands::run(cli.command)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("klab: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
