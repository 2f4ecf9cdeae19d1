//! Command-line front end.
//!
//! Data flows as CSV: vectors `x,y,z`, quaternions `w,x,y,z`, lines starting
//! with `#` ignored. Numbers are written in shortest round-trip form.
//! Diagnostics go to standard error.

mod commands;
mod records;

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quatinv::UnitVector3;
use thiserror::Error;

/// Axis flags within this distance of unit length are normalized; anything
/// farther is rejected.
pub const AXIS_NORMALIZE_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Parser)]
#[command(
    name = "quatinv",
    version,
    about = "Apply quaternion involutions to CSV data and verify their laws"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply q → −νqν to every row.
    Involute {
        #[arg(long, value_parser = parse_axis, allow_hyphen_values = true)]
        axis: UnitVector3,
        #[arg(long, value_enum, default_value_t = Kind::Quaternion)]
        kind: Kind,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Rotate vectors by composing the involutions about --axis then --axis-b.
    Rotate {
        #[arg(long, value_parser = parse_axis, allow_hyphen_values = true)]
        axis: UnitVector3,
        #[arg(long = "axis-b", value_parser = parse_axis, allow_hyphen_values = true)]
        axis_b: UnitVector3,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Split vectors into parts parallel and perpendicular to --axis.
    Project {
        #[arg(long, value_parser = parse_axis, allow_hyphen_values = true)]
        axis: UnitVector3,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Resolve quaternions against the triad completed from --axis.
    Decompose {
        #[arg(long, value_parser = parse_axis, allow_hyphen_values = true)]
        axis: UnitVector3,
        /// Verify that every row reconstructs within 1e-12.
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Run the randomized law-verification suite.
    Verify {
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Vector,
    Quaternion,
}

#[derive(Debug, Args)]
pub struct IoArgs {
    /// Input CSV (default: standard input).
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Output CSV (default: standard output).
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: u64, message: String },

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: io::Error,
    },

    #[error("{0}")]
    CheckFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::CheckFailed(_) => ExitCode::from(1),
            _ => ExitCode::from(2),
        }
    }

    fn io(context: impl Into<String>) -> impl FnOnce(io::Error) -> CliError {
        let context = context.into();
        move |source| CliError::Io { context, source }
    }
}

/// Parses `X,Y,Z` and normalizes it if it is within
/// [`AXIS_NORMALIZE_TOLERANCE`] of unit length.
pub fn parse_axis(s: &str) -> Result<UnitVector3, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [x, y, z] = parts.as_slice() else {
        return Err(format!("expected X,Y,Z but got {} fields", parts.len()));
    };
    let mut c = [0.0; 3];
    for (slot, text) in c.iter_mut().zip([x, y, z]) {
        *slot = text.parse::<f64>().map_err(|e| format!("'{text}': {e}"))?;
    }
    let v = quatinv::Vector3::new(c[0], c[1], c[2]).map_err(|e| e.to_string())?;
    let norm = v.norm();
    if (norm - 1.0).abs() > AXIS_NORMALIZE_TOLERANCE {
        return Err(format!(
            "axis must be a unit vector (norm {norm} is more than {AXIS_NORMALIZE_TOLERANCE:e} from 1)"
        ));
    }
    UnitVector3::normalize(v).map_err(|e| e.to_string())
}

fn open_input(path: Option<&PathBuf>) -> Result<Box<dyn Read>, CliError> {
    match path {
        Some(p) => {
            let f = File::open(p).map_err(CliError::io(format!("cannot open {}", p.display())))?;
            Ok(Box::new(BufReader::new(f)))
        }
        None => Ok(Box::new(io::stdin().lock())),
    }
}

fn open_output(path: Option<&PathBuf>) -> Result<Box<dyn Write>, CliError> {
    match path {
        Some(p) => {
            let f =
                File::create(p).map_err(CliError::io(format!("cannot create {}", p.display())))?;
            Ok(Box::new(BufWriter::new(f)))
        }
        None => Ok(Box::new(BufWriter::new(io::stdout().lock()))),
    }
}

pub fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let mut diag = io::stderr().lock();
    match cli.command {
        Command::Involute { axis, kind, io } => {
            let (input, mut output) = (
                open_input(io.input.as_ref())?,
                open_output(io.output.as_ref())?,
            );
            commands::involute(input, &mut output, axis, kind)?;
            output.flush().map_err(CliError::io("write"))?;
        }
        Command::Rotate { axis, axis_b, io } => {
            let (input, mut output) = (
                open_input(io.input.as_ref())?,
                open_output(io.output.as_ref())?,
            );
            commands::rotate(input, &mut output, &mut diag, axis, axis_b)?;
            output.flush().map_err(CliError::io("write"))?;
        }
        Command::Project { axis, io } => {
            let (input, mut output) = (
                open_input(io.input.as_ref())?,
                open_output(io.output.as_ref())?,
            );
            commands::project(input, &mut output, axis)?;
            output.flush().map_err(CliError::io("write"))?;
        }
        Command::Decompose { axis, check, io } => {
            let (input, mut output) = (
                open_input(io.input.as_ref())?,
                open_output(io.output.as_ref())?,
            );
            let result = commands::decompose(input, &mut output, &mut diag, axis, check);
            output.flush().map_err(CliError::io("write"))?;
            result?;
        }
        Command::Verify {
            trials,
            seed,
            output,
        } => {
            let mut out = open_output(output.as_ref())?;
            let passed = commands::verify(&mut out, trials as usize, seed)?;
            out.flush().map_err(CliError::io("write"))?;
            if !passed {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
