//! Command-line front-end: read a problem description, run one analysis and
//! produce a text summary plus a deterministic JSON report.

pub mod commands;
pub mod config;
pub mod expr;
pub mod report;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use serde_json::{json, Value};

use orelab_core::{AlgebraError, MapError, MonoidError, OreError, PiError, ScalarError, SimplicityError};

pub use commands::Outcome;
pub use config::{AnyProblem, ProblemConfig, Strategy};

pub const SCHEMA: u64 = 1;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("invalid config: {0}")]
    Config(String),
    #[error("cannot parse element: {0}")]
    Parse(String),
    #[error("missing argument {0}")]
    MissingArgument(&'static str),
    #[error("deciders disagree: {0}")]
    Disagreement(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Pi(#[from] PiError),
    #[error(transparent)]
    Ore(#[from] OreError),
    #[error(transparent)]
    Simplicity(#[from] SimplicityError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Check,
    Mul,
    Center,
    Simple,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Mul => "mul",
            Command::Center => "center",
            Command::Simple => "simple",
        }
    }
}

#[derive(Debug, Clone, Parser)]
#[command(name = "orelab", version, about = "Exact computations in Ore monoid rings R[G; pi]")]
pub struct Args {
    #[arg(value_enum)]
    pub command: Command,
    /// Problem description (JSON).
    #[arg(long)]
    pub config: PathBuf,
    /// Left factor for `mul`.
    #[arg(long, allow_hyphen_values = true)]
    pub lhs: Option<String>,
    /// Right factor for `mul`.
    #[arg(long, allow_hyphen_values = true)]
    pub rhs: Option<String>,
    /// Overrides the weight cap of the config.
    #[arg(long)]
    pub cap: Option<u64>,
    /// Overrides the simplicity strategy of the config.
    #[arg(long, value_enum)]
    pub strategy: Option<Strategy>,
    /// Write the JSON report to this file.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

/// A finished run: exit code, text summary and JSON report.
#[derive(Debug, Clone, PartialEq)]
pub struct Run {
    pub exit: i32,
    pub text: String,
    pub report: Value,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        commands::EXIT_ERROR
    }
}

/// Runs a command on an already parsed config.
pub fn execute(
    command: Command,
    mut config: ProblemConfig,
    cap: Option<u64>,
    strategy: Option<Strategy>,
    lhs: Option<&str>,
    rhs: Option<&str>,
) -> Result<Run, CliError> {
    let start = Instant::now();
    if let Some(c) = cap {
        config.analysis.weight_cap = c;
    }
    if let Some(s) = strategy {
        config.analysis.strategy = s;
    }
    let caps = config.analysis.caps();
    let problem = config.build()?;
    macro_rules! dispatch {
        ($pi:ident => $body:expr) => {
            match &problem {
                AnyProblem::Rational($pi) => $body,
                AnyProblem::Residue($pi) => $body,
            }
        };
    }
    let outcome = match command {
        Command::Check => dispatch!(pi => commands::check(pi, &caps)),
        Command::Mul => {
            let lhs = lhs.ok_or(CliError::MissingArgument("--lhs"))?;
            let rhs = rhs.ok_or(CliError::MissingArgument("--rhs"))?;
            dispatch!(pi => commands::mul(pi, &caps, lhs, rhs)?)
        }
        Command::Center => dispatch!(pi => commands::center(pi, &caps)?),
        Command::Simple => dispatch!(pi => commands::simple(pi, &caps, config.analysis.strategy)?),
    };
    let caps_json = json!({
        "weight_cap": caps.weight,
        "orbit_bound": caps.orbit_bound,
        "brute_force_cap": caps.brute_force,
        "witness_cap": caps.witness,
    });
    let mut result = outcome.result;
    if command == Command::Simple {
        if let Some(map) = result.as_object_mut() {
            map.insert("caps".to_string(), caps_json.clone());
        }
    }
    let mut report = json!({
        "schema": SCHEMA,
        "command": command.name(),
        "config": config,
        "caps": caps_json,
        "result": result,
        "exit_code": outcome.exit,
    });
    report["timing"] = json!({ "elapsed_ms": start.elapsed().as_millis() as u64 });
    Ok(Run { exit: outcome.exit, text: outcome.text, report })
}

/// Runs the command described by `args`.
pub fn run(args: &Args) -> Result<Run, CliError> {
    let config = ProblemConfig::from_file(&args.config)?;
    execute(args.command, config, args.cap, args.strategy, args.lhs.as_deref(), args.rhs.as_deref())
}

/// The report without its timing section; byte-stable across runs.
pub fn report_body(report: &Value) -> Value {
    let mut body = report.clone();
    if let Some(map) = body.as_object_mut() {
        map.remove("timing");
    }
    body
}

/// Report written when a command fails before producing a result.
pub fn error_report(command: Command, err: &CliError) -> Value {
    json!({
        "schema": SCHEMA,
        "command": command.name(),
        "error": err.to_string(),
        "exit_code": err.exit_code(),
    })
}
