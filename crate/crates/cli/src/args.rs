//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "klab",
    version,
    about = "Elliptical components of Kippenhahn curves of reciprocal tridiagonal matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every criterion and report the elliptical components.
    Classify {
        #[command(flatten)]
        input: XiArgs,
        /// Cross-check the verdict against the sampled curve.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = 2048)]
        grid: usize,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Regenerate one of the six reference figures (JSON and SVG).
    Reproduce {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=6))]
        figure: u8,
        #[arg(long, default_value_t = 2048)]
        grid: usize,
        /// Directory receiving `figN.json` and `figN.svg`.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Verify every catalogued shifted-pair solution vector.
    Catalog {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample the curve and emit `theta,branch,x,y,flag` rows.
    Sample {
        #[command(flatten)]
        input: XiArgs,
        #[arg(long, default_value_t = 2048)]
        grid: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test for origin-centred ellipses.
    CheckOrigin {
        #[command(flatten)]
        input: XiArgs,
        /// Focus index; all indices when omitted.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test whether the whole curve is concentric ellipses.
    CheckConcentric {
        #[command(flatten)]
        input: XiArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test for the shifted pair with center `p` and half focal distance `X`.
    CheckShifted {
        #[command(flatten)]
        input: XiArgs,
        /// Center as a constant expression, e.g. `(sqrt(2+sqrt2)-sqrt(2-sqrt2))/2`.
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        /// Half focal distance, same grammar as `--p`.
        #[arg(long)]
        x: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// How `ξ` is supplied.
#[derive(Debug, Args)]
pub struct XiArgs {
    /// Comma-separated entries: integers, `p/q`, `a+b*sqrt2` or decimals.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "input")]
    pub xi: Option<String>,
    /// JSON file `{"n": 7, "xi": [...]}`.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Matrix size; defaults to one more than the number of entries.
    #[arg(long)]
    pub n: Option<usize>,
    /// Reject decimal entries and insist on exact arithmetic.
    #[arg(long)]
    pub exact: bool,
    /// Numeric zero threshold for residuals.
    #[arg(long)]
    pub tol: Option<f64>,
}
