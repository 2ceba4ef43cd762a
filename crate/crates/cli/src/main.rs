use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pdcg_cli::commands::{self, exit, Input, Options, Outcome, PositiveFlags, SymconvFlags};
use pdcg_core::limits;

/// Exact analysis of partially defined cooperative games.
///
/// Exit codes: 0 success, 1 failure (caps, work limits), 2 bad input,
/// 3 not extendable, 4 not partially symmetric, 5 unbounded,
/// 6 crossed interval bounds.
#[derive(Parser)]
#[command(name = "pdcg", version)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    machine: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Class flags and witnesses of a complete game.
    Classify { file: PathBuf },
    /// Positive (totally monotonic) extensions of an incomplete game.
    Positive {
        file: PathBuf,
        /// Print the Farkas certificate, or a witness when extendable.
        #[arg(long)]
        certificate: bool,
        /// Enumerate extreme games by their balanced collections.
        #[arg(long)]
        extremes: bool,
        /// Print lower and upper games.
        #[arg(long)]
        bounds: bool,
        /// Size envelope of symmetric positive extensions.
        #[arg(long)]
        symmetric: bool,
    },
    /// Symmetric convex extensions of a partially symmetric game.
    Symconv {
        file: PathBuf,
        #[arg(long)]
        bounds: bool,
        #[arg(long)]
        extremes: bool,
        /// Weights of a complete symmetric game over the extreme games.
        #[arg(long, value_name = "GAME")]
        decompose: Option<PathBuf>,
    },
    /// Interval game spanned by a lower and an upper game.
    Interval { lower: PathBuf, upper: PathBuf },
}

fn read(path: &Path) -> Result<Input, String> {
    std::fs::read_to_string(path)
        .map(|text| Input { name: path.display().to_string(), text })
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn max_n() -> Result<Option<usize>, String> {
    match std::env::var(limits::ENV_VAR) {
        Ok(v) => {
            v.trim().parse().map(Some).map_err(|_| format!("{} must be a player count, got {v:?}", limits::ENV_VAR))
        }
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(format!("{}: {e}", limits::ENV_VAR)),
    }
}

fn run(cli: Cli) -> Result<Outcome, String> {
    let opts = Options { machine: cli.machine, max_n: max_n()? };
    Ok(match cli.command {
        Command::Classify { file } => commands::classify_cmd(&read(&file)?, &opts),
        Command::Positive { file, certificate, extremes, bounds, symmetric } => {
            let flags = PositiveFlags { certificate, extremes, bounds, symmetric };
            commands::positive_cmd(&read(&file)?, flags, &opts)
        }
        Command::Symconv { file, bounds, extremes, decompose } => {
            let target = decompose.as_deref().map(read).transpose()?;
            commands::symconv_cmd(&read(&file)?, SymconvFlags { bounds, extremes }, target.as_ref(), &opts)
        }
        Command::Interval { lower, upper } => commands::interval_cmd(&read(&lower)?, &read(&upper)?, &opts),
    })
}

fn main() -> ExitCode {
    let outcome = run(Cli::parse()).unwrap_or_else(|message| Outcome {
        stdout: String::new(),
        stderr: format!("error: {message}\n"),
        code: exit::INPUT,
    });
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.code as u8)
}
