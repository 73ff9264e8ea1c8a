//! Command-line front end: expression parsing and the `torus` subcommands.
//!
//! [`run`] takes the argument vector and output streams explicitly so the
//! whole surface can be driven in-process. Exit codes: `0` success, `1` a
//! domain error (even `n`, inadmissible polynomial, failed verification),
//! `2` a usage or parse error.

pub mod expr;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;
use torus_core::exact_poly::int;
use torus_core::gauss::{self, torus_diagram};
use torus_core::restriction::{decompose, from_samples, verify_theorem};
use torus_core::{CurveElement, GaussDiagram, Rational, SampleSet, TorusKnotIndex};

use crate::expr::{parse_expression, Family, ParseError, Parsed};

/// Largest `|n|` for which `invariant` builds a torus diagram.
pub const MAX_DIAGRAM_INDEX: u64 = 99;

#[derive(Debug, Parser)]
#[command(
    name = "torus",
    version,
    about = "Finite-type invariants of (n,2)-torus knots and the curve Y^2 = X^3 + X^2"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Normal form p(X) + (q(X))*Y of an expression in X and Y.
    Reduce {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
    },
    /// Value of an expression in X, Y (or in n) on the torus knot [n].
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Write a polynomial in n with f(1) = f(-1) in the basis X^l, X^(l-1)*Y.
    Decompose(DecomposeArgs),
    /// Check the filtration dimensions up to the given order.
    Verify {
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        json: bool,
    },
    /// x = 8 v2 and y = 24 v3 by Gauss-diagram counting.
    Invariant(InvariantArgs),
    /// One row (n, x, y) per odd n in [min, max].
    CurveSamples {
        #[arg(long, allow_negative_numbers = true)]
        min: i64,
        #[arg(long, allow_negative_numbers = true)]
        max: i64,
        #[arg(long, value_enum, default_value_t = SampleFormat::Csv)]
        format: SampleFormat,
    },
}

#[derive(Debug, Args)]
struct DecomposeArgs {
    #[command(flatten)]
    source: PolynomialSource,
    /// Degree bound for the polynomial behind `--samples`.
    #[arg(long, requires = "samples")]
    degree_bound: Option<usize>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct PolynomialSource {
    /// Polynomial in n (or an expression in X and Y).
    #[arg(long, allow_hyphen_values = true)]
    expr: Option<String>,
    /// Comma-separated `n:value` pairs, e.g. `1:0,-1:0,3:8`.
    #[arg(long, requires = "degree_bound", allow_hyphen_values = true)]
    samples: Option<String>,
}

#[derive(Debug, Args)]
struct InvariantArgs {
    #[command(flatten)]
    source: DiagramSource,
    /// Also print the Gauss code of the diagram.
    #[arg(long)]
    show_code: bool,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct DiagramSource {
    /// Use the standard diagram of the torus knot [n].
    #[arg(long, allow_negative_numbers = true)]
    n: Option<i64>,
    /// Use an explicit Gauss code such as "O1+ U2+ O3+ U1+ O2+ U3+".
    #[arg(long, allow_hyphen_values = true)]
    code: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SampleFormat {
    Csv,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Domain(#[from] torus_core::Error),
    #[error("{0}")]
    OutOfRange(String),
    #[error("verification failed at order(s) {0}")]
    Verification(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::Domain(_)
            | CliError::OutOfRange(_)
            | CliError::Verification(_)
            | CliError::Io(_) => 1,
        }
    }
}

impl From<torus_core::AdmissibilityError> for CliError {
    fn from(e: torus_core::AdmissibilityError) -> Self {
        CliError::Domain(e.into())
    }
}

/// One line of the `verify --json` report.
#[derive(Debug, Serialize)]
struct ReportRecord {
    k: usize,
    dim: usize,
    quotient_dim: usize,
    pass: bool,
}

/// Parses `argv` (including the program name) and runs the subcommand.
/// Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                2
            } else {
                let _ = write!(out, "{}", e.render());
                0
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Reduce { expr } => {
            let element = curve_expression(&expr, "reduce")?;
            writeln!(out, "{element}")?;
        }
        Command::Eval { expr, n } => {
            let parsed = parse_expression(&expr)?;
            let value = match parsed.family {
                Family::Curve => parsed.expr.to_curve().expect("curve").eval_at(n)?,
                Family::Constant | Family::Knot => {
                    TorusKnotIndex::new(n)?;
                    parsed.to_function().eval(&int(n))
                }
            };
            writeln!(out, "{value}")?;
        }
        Command::Decompose(args) => {
            let decomposition = match (args.source.expr, args.source.samples, args.degree_bound) {
                (Some(expr), _, _) => decompose(&parse_expression(&expr)?.to_function())?,
                (None, Some(samples), Some(bound)) => {
                    from_samples(&parse_samples(&samples)?, bound)?
                }
                _ => unreachable!("clap enforces the argument group"),
            };
            writeln!(out, "{decomposition}")?;
        }
        Command::Verify { max_order, json } => {
            let report = verify_theorem(max_order);
            if json {
                let records: Vec<ReportRecord> = report
                    .checks
                    .iter()
                    .map(|c| ReportRecord {
                        k: c.k,
                        dim: c.dim,
                        quotient_dim: c.quotient_dim,
                        pass: c.pass(),
                    })
                    .collect();
                let text = serde_json::to_string_pretty(&records).expect("plain data serializes");
                writeln!(out, "{text}")?;
            } else {
                for c in &report.checks {
                    writeln!(
                        out,
                        "k={} dim={} quotient_dim={} pass={}",
                        c.k,
                        c.dim,
                        c.quotient_dim,
                        c.pass()
                    )?;
                }
            }
            let failed: Vec<String> = report
                .checks
                .iter()
                .filter(|c| !c.pass())
                .map(|c| c.k.to_string())
                .collect();
            if !failed.is_empty() {
                return Err(CliError::Verification(failed.join(", ")));
            }
        }
        Command::Invariant(args) => {
            let diagram = match (args.source.n, args.source.code) {
                (Some(n), _) => {
                    let index = TorusKnotIndex::new(n)?;
                    if n.unsigned_abs() > MAX_DIAGRAM_INDEX {
                        return Err(CliError::OutOfRange(format!(
                            "|n| = {} exceeds the diagram size limit of {MAX_DIAGRAM_INDEX}",
                            n.unsigned_abs()
                        )));
                    }
                    torus_diagram(index)
                }
                (None, Some(code)) => GaussDiagram::parse(&code)?,
                _ => unreachable!("clap enforces the argument group"),
            };
            if args.show_code {
                writeln!(out, "code = {diagram}")?;
            }
            let x = gauss::v2(&diagram) * int(8);
            let y = gauss::v3(&diagram) * int(24);
            writeln!(out, "x = {x}")?;
            writeln!(out, "y = {y}")?;
        }
        Command::CurveSamples { min, max, format } => match format {
            SampleFormat::Csv => write_curve_csv(min, max, out)?,
        },
    }
    Ok(())
}

fn curve_expression(src: &str, command: &str) -> Result<CurveElement, CliError> {
    let parsed: Parsed = parse_expression(src)?;
    match parsed.family {
        Family::Knot => Err(CliError::Usage(format!(
            "{command} expects an expression in X and Y, not in n"
        ))),
        Family::Curve | Family::Constant => Ok(parsed.expr.to_curve().expect("no n")),
    }
}

fn parse_samples(src: &str) -> Result<SampleSet, CliError> {
    let mut set = SampleSet::new();
    for item in src.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let bad = || CliError::Usage(format!("bad sample '{item}', expected n:value"));
        let (n, value) = item.split_once(':').ok_or_else(bad)?;
        let n: i64 = n.trim().parse().map_err(|_| bad())?;
        let parsed = parse_expression(value)?;
        if parsed.family != Family::Constant {
            return Err(bad());
        }
        let value: Rational = parsed.to_function().coeff(0);
        if set.get(n).is_some() {
            return Err(CliError::Usage(format!("sample at n = {n} given twice")));
        }
        set.insert(n, value)?;
    }
    Ok(set)
}

/// Header `n,x,y`, then one row per odd `n` in `[min, max]`.
fn write_curve_csv(min: i64, max: i64, out: &mut dyn Write) -> Result<(), CliError> {
    let (x, y) = (CurveElement::x(), CurveElement::y());
    writeln!(out, "n,x,y")?;
    let first = if min % 2 == 0 { min + 1 } else { min };
    for n in (first..=max).step_by(2) {
        writeln!(out, "{n},{},{}", x.eval_at(n)?, y.eval_at(n)?)?;
    }
    Ok(())
}
