//! Command-line front end for the `symplane` library.

pub mod args;
pub mod error;
pub mod render;
pub mod report;
pub mod svg;

use std::io::Write;
use std::path::Path;

use serde::Serialize;

use args::{Cli, Command, OutputFormat};
use error::CliError;

fn write_json<T: Serialize, W: Write>(value: &T, mut out: W) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn write_svg(path: Option<&Path>, render: impl FnOnce() -> String) -> Result<(), CliError> {
    if let Some(path) = path {
        std::fs::write(path, render())?;
    }
    Ok(())
}

fn csv_unsupported(name: &str) -> CliError {
    CliError::Usage(format!("--csv is not available for `{name}`"))
}

/// Execute one parsed command, writing the report to `out`.
pub fn execute<W: Write>(cli: &Cli, out: W) -> Result<(), CliError> {
    let format = cli.output_format();
    let svg = cli.svg.as_deref();
    match &cli.command {
        Command::Identities(o) => {
            if svg.is_some() {
                return Err(CliError::Usage("--svg is not available for `identities`".into()));
            }
            let r = report::run_identities(o)?;
            match format {
                OutputFormat::Json => write_json(&r, out)?,
                OutputFormat::Csv => render::identities_csv(&r, out)?,
            }
            report::check_identities(&r)
        }
        Command::Intersect(o) => {
            if format == OutputFormat::Csv {
                return Err(csv_unsupported("intersect"));
            }
            let r = report::run_intersect(o)?;
            write_json(&r, out)?;
            write_svg(svg, || render::intersect_svg(o, &r.results))
        }
        Command::Tangents(o) => {
            if format == OutputFormat::Csv {
                return Err(csv_unsupported("tangents"));
            }
            let r = report::run_tangents(o)?;
            write_json(&r, out)?;
            write_svg(svg, || render::tangents_svg(o, &r.results))
        }
        Command::Crank(o) => {
            let r = report::run_crank(o)?;
            match format {
                OutputFormat::Json => write_json(&r, out)?,
                OutputFormat::Csv => render::crank_csv(&r, out)?,
            }
            write_svg(svg, || render::crank_svg(&r))?;
            report::check_crank(&r)
        }
        Command::Oscillator(o) => {
            let r = report::run_oscillator(o)?;
            match format {
                OutputFormat::Json => write_json(&r, out)?,
                OutputFormat::Csv => render::oscillator_csv(&r, out)?,
            }
            write_svg(svg, || render::oscillator_svg(&r))
        }
    }
}
