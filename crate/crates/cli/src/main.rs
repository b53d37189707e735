//! `painleve`: integrability checks, fiber classification and result tables.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use painleve::algebra::DEFAULT_SEED;

use report::Format;

#[derive(Parser)]
#[command(name = "painleve", version, about = "Integrability and singular fibers of Painleve-type systems")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for witness points.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,
    /// Worker threads, 0 for one per core.
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Poisson commutation, independence and Lax checks.
    Verify(Selection),
    /// Singular fiber at infinity of each fibration.
    Classify {
        #[command(flatten)]
        selection: Selection,
        #[arg(long, value_enum, default_value_t = FibrationArg::Both)]
        fibration: FibrationArg,
        /// Curve JSON file to classify instead of bundled data.
        #[arg(long)]
        curve: Option<PathBuf>,
    },
    /// Kodaira table or genus-two fiber tables.
    Table {
        #[arg(long, value_enum, default_value_t = TableSet::Genus1)]
        set: TableSet,
        #[arg(long, value_enum, default_value_t = FibrationArg::Both)]
        fibration: FibrationArg,
    },
}

#[derive(Args, Clone)]
pub struct Selection {
    /// System name as printed, e.g. "H_Gar^{9/2}"; repeatable.
    #[arg(long = "system")]
    pub systems: Vec<String>,
    /// Every catalog entry.
    #[arg(long)]
    pub all: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FibrationArg {
    H,
    G,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableSet {
    Genus1,
    Genus2,
}

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass = 0,
    Usage = 1,
    Mismatch = 2,
    Unsupported = 3,
}

pub struct Config {
    pub format: Format,
    pub seed: u64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { Status::Usage } else { Status::Pass };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build();
    let pool = match pool {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {}", e);
            return ExitCode::from(Status::Usage as u8);
        }
    };
    let cfg = Config {
        format: cli.format,
        seed: cli.seed,
    };
    let result = pool.install(|| match &cli.command {
        Command::Verify(sel) => commands::verify(&cfg, sel),
        Command::Classify {
            selection,
            fibration,
            curve,
        } => commands::classify(&cfg, selection, *fibration, curve.as_deref()),
        Command::Table { set, fibration } => commands::table(&cfg, *set, *fibration),
    });
    match result {
        Ok((report, status)) => {
            print!("{}", report.render(cfg.format));
            ExitCode::from(status as u8)
        }
        Err((msg, status)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(status as u8)
        }
    }
}
