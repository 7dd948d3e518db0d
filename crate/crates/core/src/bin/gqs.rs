use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use gqs::cli::{self, Command};

/// Gravitational quantum states of neutrons and entangled-pair feasibility.
#[derive(Parser)]
#[command(name = "gqs", version)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Characteristic length l0 and energy eps0
    Scales(Common),
    /// Cavity energy levels, gap and resolution time
    Levels(Common),
    /// Probability density grids as CSV
    Grid(Common),
    /// Absorber selectivity, bounce statistics and hopper geometry
    Design(Common),
    /// Full pair-production feasibility report
    Report(Common),
}

#[derive(Args)]
struct Common {
    /// JSON configuration file
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output path, overriding `output_path` in the configuration
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let args = Cli::parse();
    let (command, common) = match args.command {
        Sub::Scales(c) => (Command::Scales, c),
        Sub::Levels(c) => (Command::Levels, c),
        Sub::Grid(c) => (Command::Grid, c),
        Sub::Design(c) => (Command::Design, c),
        Sub::Report(c) => (Command::Report, c),
    };
    match run(command, common) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            let mut source = std::error::Error::source(&e);
            while let Some(s) = source {
                eprintln!("  caused by: {s}");
                source = s.source();
            }
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command, common: Common) -> gqs::Result<()> {
    let text = match &common.config {
        Some(path) => std::fs::read_to_string(path).map_err(|source| gqs::Error::Io {
            path: path.clone(),
            source,
        })?,
        None => "{}".to_owned(),
    };
    let mut cfg = cli::parse_config_for(&text, Some(command))?;
    if common.out.is_some() {
        cfg.output_path = common.out;
    }
    cli::run(&cfg)?;
    Ok(())
}
