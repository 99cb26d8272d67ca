//! `prytz <command> --scenario <file> [--out <dir>]`
//!
//! Exit codes: 0 success, 2 usage, scenario or I/O error, 3 numeric failure,
//! 4 planner non-convergence.

mod commands;
mod scenario;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::scenario::Scenario;

#[derive(Parser)]
#[command(name = "prytz", version, about = "Prytz planimeter simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Io {
    /// Scenario JSON file.
    #[arg(long)]
    scenario: PathBuf,
    /// Output directory (default: the scenario's `output`, else `.`).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Lift the tracer curve and report the area estimates.
    Area(Io),
    /// Holonomy, Magnus terms and the lift agreement table.
    Holonomy(Io),
    /// Error terms over a list of rod lengths, with log-log slopes.
    Sweep(Io),
    /// Integrate a normal geodesic.
    Geodesic(Io),
    /// Plan a motion between two configurations.
    Plan(Io),
    /// Lift a chain of rods.
    Chain(Io),
    /// Regenerate the circle, star and geodesic figure data.
    Figures(Io),
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] prytz::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 2,
            CliError::Core(prytz::Error::NonFinite(_)) => 3,
            CliError::Core(prytz::Error::Convergence { .. }) => 4,
            CliError::Core(_) => 2,
        }
    }
}

type Handler = fn(&Scenario, &commands::Out) -> Result<(), CliError>;

fn run(cli: Cli) -> Result<(), CliError> {
    let (cmd, io): (Handler, Io) = match cli.command {
        Command::Area(io) => (commands::area, io),
        Command::Holonomy(io) => (commands::holonomy, io),
        Command::Sweep(io) => (commands::sweep, io),
        Command::Geodesic(io) => (commands::geodesic, io),
        Command::Plan(io) => (commands::plan, io),
        Command::Chain(io) => (commands::chain, io),
        Command::Figures(io) => (commands::figures, io),
    };
    let text = std::fs::read_to_string(&io.scenario).map_err(|source| CliError::Io {
        path: io.scenario.clone(),
        source,
    })?;
    let scenario = Scenario::from_json(&text)?;
    let dir = io
        .out
        .or_else(|| scenario.output.clone())
        .unwrap_or_else(|| PathBuf::from("."));
    let out = commands::Out::new(dir)?;
    cmd(&scenario, &out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("prytz: {e}");
            if let CliError::Core(prytz::Error::Convergence { best, .. }) = &e {
                eprintln!(
                    "prytz: best configuration x = {}, y = {}, theta = {}",
                    best.x, best.y, best.theta
                );
            }
            ExitCode::from(e.exit_code())
        }
    }
}
