//! `palinkit`: palindromic length experiments from the command line.
//!
//! Exit status: 0 success, 1 usage, 2 resource or I/O, 3 a check failed.

mod commands;
mod config;
mod report;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::{FileConfig, Usage};

#[derive(Parser, Debug)]
#[command(name = "palinkit", version, about = "Palindromic length experiments")]
struct Cli {
    /// TOML file with default settings; flags take precedence
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Palindromic length of a word or a family prefix
    Pl(commands::PlArgs),
    /// Palindromic length of every prefix
    Profile(commands::ProfileArgs),
    /// Factors with many palindromic prefixes
    ScanOmega(commands::ScanArgs),
    /// Search for a palindromic (ab)^j prefix inside a factor
    Hunt(commands::HuntArgs),
    /// Run an exhaustive verification suite
    Verify(verify::VerifyArgs),
}

fn threads() -> anyhow::Result<()> {
    let Ok(value) = std::env::var("PALINKIT_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .map_err(|_| config::usage(format!("PALINKIT_THREADS must be a number, got `{value}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()?;
    Ok(())
}

fn run(cli: &Cli) -> anyhow::Result<()> {
    threads()?;
    let file = FileConfig::load(cli.config.as_deref())?;
    match &cli.command {
        Command::Pl(a) => commands::pl(a, &file),
        Command::Profile(a) => commands::profile(a, &file),
        Command::ScanOmega(a) => commands::scan_omega(a, &file),
        Command::Hunt(a) => commands::hunt(a, &file),
        Command::Verify(a) => verify::verify(a, &file),
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<Usage>().is_some() {
        return 1;
    }
    if err.downcast_ref::<verify::Failed>().is_some() {
        return 3;
    }
    if let Some(e) = err.downcast_ref::<palinkit::Error>() {
        return match e {
            palinkit::Error::Resource(_) => 2,
            palinkit::Error::Invariant(_) => 3,
            _ => 1,
        };
    }
    2
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
