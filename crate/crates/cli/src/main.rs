mod cli;
mod commands;
mod config;
mod manifest;
mod output;

use clap::{CommandFactory, FromArgMatches};
use std::process::ExitCode;

use cli::{Cli, Command};
use commands::{CliError, Context};
use manifest::RunManifest;

fn threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("PINCHLAB_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("PINCHLAB_THREADS must be a positive integer, got '{v}'")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))
}

fn run() -> Result<bool, CliError> {
    let argv = config::merge(std::env::args_os().collect())?;
    let root = Cli::command();
    let matches = root.clone().get_matches_from(argv);
    let cli = Cli::from_arg_matches(&matches).unwrap_or_else(|e| e.exit());
    threads()?;
    let (name, sub) = matches.subcommand().expect("subcommand is required");
    let sub_command = root.find_subcommand(name).expect("known subcommand");
    let mut ctx = Context {
        manifest: RunManifest::start(cli.command.name(), manifest::parameters(sub_command, sub), cli.reproducible),
        reproducible: cli.reproducible,
    };
    match &cli.command {
        Command::Bounds(a) => commands::bounds::run(a, &mut ctx),
        Command::Verify(a) => commands::verify::run(a, &mut ctx),
        Command::Flow(a) => commands::flow::run(a, &mut ctx),
        Command::Sturm(a) => commands::sturm::run(a, &mut ctx),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("pinchlab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
