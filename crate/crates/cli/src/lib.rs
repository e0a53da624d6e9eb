//! Command-line front end for `pullbacklab`: the group catalog, input
//! parsing, command dispatch and serializable reports.

pub mod args;
pub mod catalog;
pub mod commands;
pub mod error;
pub mod report;
pub mod session;
pub mod spec;
pub mod sweep;
pub mod verify;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use args::{Cli, Format};
use catalog::{parse_catalog, Catalog};
use commands::{execute, Outcome};
use error::CliError;
use session::Session;

pub fn session_for(cli: &Cli) -> Result<Session, CliError> {
    let mut catalog = Catalog::bundled();
    if let Some(path) = &cli.catalog {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read catalog {}: {e}", path.display())))?;
        let entries = parse_catalog(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        catalog = catalog.with_overrides(entries);
    }
    let max_order = cli.order_cap.unwrap_or_else(pullbacklab::perm::max_order_from_env);
    Ok(Session::new(catalog, max_order))
}

/// Runs a parsed command line, stamping the elapsed time when asked.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let session = session_for(cli)?;
    let mut outcome = execute(&session, &cli.command)?;
    if cli.timing {
        outcome.report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(outcome)
}

/// Renders a report in the requested format. CSV is only defined for
/// matrix results.
pub fn render(outcome: &Outcome, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(outcome.report.to_json() + "\n"),
        Format::Text => Ok(outcome.report.to_text()),
        Format::Csv => outcome
            .report
            .to_csv()
            .ok_or_else(|| CliError::Input(format!("{} does not produce a matrix; CSV is for matrices only", outcome.report.command))),
    }
}

/// Entry point shared by the binary: prints the report or the error and
/// returns the exit code.
pub fn main_with(cli: Cli) -> ExitCode {
    let result = run(&cli).and_then(|o| render(&o, cli.format).map(|text| (o.failed, text)));
    match result {
        Ok((failed, text)) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(text.as_bytes());
            let _ = stdout.flush();
            if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("pullbacklab: {e}");
            e.to_exit_code()
        }
    }
}
