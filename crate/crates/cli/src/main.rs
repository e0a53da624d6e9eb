use std::process::ExitCode;

use clap::Parser;
use pullbacklab_cli::args::Cli;

fn main() -> ExitCode {
    pullbacklab_cli::main_with(Cli::parse())
}
