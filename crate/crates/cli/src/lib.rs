//! Command-line front end for the `rattrig` library.
//!
//! The binary is a thin wrapper around [`run`]; everything here is public so
//! the integration tests can drive the commands in-process.

pub mod analyze;
pub mod draw;
pub mod error;
pub mod input;
pub mod solve;
pub mod verify;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use rattrig::FieldSpec;

pub use error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "rattrig", version, about = "Exact rational trigonometry over Q and F_p")]
pub struct Cli {
    /// `rational` or `fp:<odd prime>`.
    #[arg(long, global = true, default_value = "rational")]
    pub field: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for random verification.
    #[arg(long, global = true, env = "RATTRIG_SEED")]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Quadrances, spreads, quadrea and degeneracies of three points.
    Analyze {
        /// Three points, e.g. "0,0 7,5 2,8".
        #[arg(long, allow_hyphen_values = true)]
        points: String,
    },
    /// Complete a triangle from partial data.
    Solve {
        /// Comma separated, optionally named: "68,74" or "Q2=68,Q3=74".
        #[arg(long, alias = "quadrance", allow_hyphen_values = true)]
        quadrances: Vec<String>,
        /// Comma separated, optionally named: "s1=529/1258".
        #[arg(long = "spread", alias = "spreads", allow_hyphen_values = true)]
        spreads: Vec<String>,
    },
    /// Check every law on sampled or enumerated triangles.
    Verify {
        /// Number of random triangles.
        #[arg(long, conflicts_with = "exhaustive", required_unless_present = "exhaustive")]
        random: Option<u64>,
        /// Every triangle over the prime field, up to translation.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, default_value_t = verify::DEFAULT_MAX_PRIME)]
        max_prime: u64,
    },
    /// Write an SVG diagram.
    Draw {
        #[command(subcommand)]
        target: DrawTarget,
    },
}

#[derive(Debug, Subcommand)]
pub enum DrawTarget {
    Triangle {
        #[arg(long, allow_hyphen_values = true)]
        points: String,
        #[arg(long)]
        out: PathBuf,
    },
    Protractor {
        #[arg(long, default_value_t = 20)]
        divisions: u32,
        #[arg(long)]
        out: PathBuf,
    },
}

/// What a command printed, and whether it succeeded. A failed verification
/// still prints its census.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub status: Result<(), CliError>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        self.status.as_ref().map_or_else(CliError::exit_code, |()| 0)
    }
}

impl From<Result<String, CliError>> for Outcome {
    fn from(r: Result<String, CliError>) -> Self {
        match r {
            Ok(stdout) => Outcome { stdout, status: Ok(()) },
            Err(e) => Outcome { stdout: String::new(), status: Err(e) },
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("outputs serialize");
    s.push('\n');
    s
}

fn census_text(c: &verify::VerificationCensus) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "field               {}", c.field);
    let _ = writeln!(out, "mode                {}", c.mode);
    if let Some(seed) = c.seed {
        let _ = writeln!(out, "seed                {seed}");
    }
    let _ = writeln!(out, "configurations      {}", c.configurations);
    let _ = writeln!(out, "duplicate vertices  {}", c.duplicate_vertices);
    let _ = writeln!(out, "collinear           {}", c.collinear);
    let _ = writeln!(out, "null lines          {}", c.null_lines);
    let _ = writeln!(out, "isotropic segments  {}", c.isotropic_segments);
    let _ = writeln!(out, "spread checked      {}", c.spread_checked);
    let _ = writeln!(out, "law evaluations     {}", c.law_evaluations);
    let _ = writeln!(out, "failures            {}", c.failures);
    for f in &c.failure_examples {
        let _ = writeln!(out, "  {f}");
    }
    out
}

fn write_svg(path: &PathBuf, svg: &str, format: Format) -> Result<String, CliError> {
    std::fs::write(path, svg)?;
    Ok(match format {
        Format::Json => json(&serde_json::json!({ "out": path.display().to_string(), "bytes": svg.len() })),
        Format::Text => format!("wrote {} ({} bytes)\n", path.display(), svg.len()),
    })
}

fn dispatch(cli: &Cli, field: &FieldSpec) -> Result<Outcome, CliError> {
    let text = cli.format == Format::Text;
    let stdout = match &cli.command {
        Command::Analyze { points } => {
            let out = analyze::analyze(field, input::parse_triangle(field, points)?)?;
            if text { out.to_text() } else { json(&out) }
        }
        Command::Solve { quadrances, spreads } => {
            let known = input::parse_known(field, quadrances, spreads)?;
            let out = solve::solve(field, &known)?;
            if text { out.to_text() } else { json(&out) }
        }
        Command::Verify { random, exhaustive, max_prime } => {
            let mode = match (random, exhaustive) {
                (_, true) => verify::Mode::Exhaustive,
                (Some(n), false) => verify::Mode::Random(*n),
                (None, false) => return Err(CliError::Config("pass --random N or --exhaustive".into())),
            };
            let census = verify::verify(field, mode, cli.seed.unwrap_or(0), *max_prime)?;
            let stdout = if text { census_text(&census) } else { json(&census) };
            let status = match census.failures {
                0 => Ok(()),
                failures => Err(CliError::VerificationFailed { failures }),
            };
            return Ok(Outcome { stdout, status });
        }
        Command::Draw { target } => match target {
            DrawTarget::Triangle { points, out } => {
                let svg = draw::triangle_svg(field, input::parse_triangle(field, points)?)?;
                write_svg(out, &svg, cli.format)?
            }
            DrawTarget::Protractor { divisions, out } => {
                let svg = draw::protractor_svg(*divisions)?;
                write_svg(out, &svg, cli.format)?
            }
        },
    };
    Ok(Outcome { stdout, status: Ok(()) })
}

pub fn run(cli: &Cli) -> Outcome {
    let field = match cli.field.parse::<FieldSpec>() {
        Ok(f) => f,
        Err(e) => return Outcome::from(Err(CliError::from(e))),
    };
    dispatch(cli, &field).unwrap_or_else(|e| Outcome::from(Err(e)))
}
