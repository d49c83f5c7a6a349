// Copyright 2026 The lozenge developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// http://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or http://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.

//! The `lozenge` command line.
//!
//! - `count`: one region, by formula, oracle or both;
//! - `verify`: a parameter grid swept by a worker pool, reported as JSON;
//! - `render`: a region or one of its tilings as SVG;
//! - `bijection`: a tiling, its plane partition and the round trip.
//!
//! JSON output is byte-identical across runs with the same arguments.
//! Counts are decimal strings. Exit codes are listed on [`CliError`].

#![warn(missing_docs)]

use std::ffi::OsString;
use std::path::Path;

use clap::Parser;
use lozenge::bijection::BijectionError;
use lozenge::closedform::FormulaError;
use lozenge::oracle::OracleError;
use thiserror::Error;

pub mod args;
pub mod commands;
pub mod region;
pub mod render;
pub mod verify;

use args::{Cli, Command};

/// Environment variable holding the number of `verify` workers.
pub const WORKERS_ENV: &str = "LOZENGE_WORKERS";

/// Failures, each with its process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Exit 2: the arguments do not describe a valid input.
    #[error("invalid input: {0}")]
    Invalid(String),
    /// Exit 3: two computations that must agree do not.
    #[error("verification mismatch: {0}")]
    Mismatch(String),
    /// Exit 4: the region is too large for the oracle.
    #[error("resource guard: {0}")]
    Guard(String),
    /// Exit 5: a tiling index beyond the number of tilings.
    #[error("index out of range: {0}")]
    OutOfRange(String),
    /// Exit 1: an output file could not be written.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// The process exit code.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Invalid(_) => 2,
            CliError::Mismatch(_) => 3,
            CliError::Guard(_) => 4,
            CliError::OutOfRange(_) => 5,
        }
    }
}

impl From<FormulaError> for CliError {
    fn from(e: FormulaError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::LimitExceeded { .. } => CliError::Guard(e.to_string()),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

impl From<BijectionError> for CliError {
    fn from(e: BijectionError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    /// Process exit code.
    pub code: i32,
    /// Text for standard output.
    pub stdout: String,
    /// Text for standard error.
    pub stderr: String,
}

/// A finished command: its document, and an error to report after the
/// document has been emitted.
pub struct Report {
    /// JSON or SVG text.
    pub text: String,
    /// Set when the document records a failure.
    pub failure: Option<CliError>,
}

impl Report {
    /// A successful document.
    pub fn ok(text: String) -> Self {
        Report {
            text,
            failure: None,
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<String, CliError> {
    match out {
        Some(path) => {
            std::fs::write(path, text)?;
            Ok(String::new())
        }
        None => Ok(text.to_string()),
    }
}

/// Parses arguments (the first one is the program name) and runs the
/// command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let (result, out) = match &cli.command {
        Command::Count(a) => (commands::count(a), a.out.as_deref()),
        Command::Verify(a) => (verify::verify(a), a.out.as_deref()),
        Command::Render(a) => (render::render(a), a.out.as_deref()),
        Command::Bijection(a) => (commands::bijection(a), a.out.as_deref()),
    };
    let report = match result {
        Ok(r) => r,
        Err(e) => {
            return Outcome {
                code: e.exit_code(),
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            };
        }
    };
    let stdout = match emit(&report.text, out) {
        Ok(s) => s,
        Err(e) => {
            return Outcome {
                code: e.exit_code(),
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            };
        }
    };
    match report.failure {
        None => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Some(e) => Outcome {
            code: e.exit_code(),
            stdout,
            stderr: format!("error: {e}\n"),
        },
    }
}
