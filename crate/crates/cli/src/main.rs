//! `impsub`: enumerate implication sublattices, query Möbius values, run the
//! verification suites and export Hasse diagrams.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check fails,
//! 2 on usage or configuration errors.

mod commands;
mod config;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use crate::config::{Cli, RunConfig};

/// Result of a command that ran to completion.
pub enum Outcome {
    Pass,
    CheckFailed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = RunConfig::from_cli(cli).and_then(|config| {
        let (text, outcome) = commands::run(&config)?;
        config.emit(&text)?;
        Ok(outcome)
    });
    match result {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(1),
        Err(err) => {
            let _ = writeln!(std::io::stderr(), "error: {err:#}");
            ExitCode::from(2)
        }
    }
}
