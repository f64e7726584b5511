use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use flatgroup::cli::{self, MethodChoice, Outcome, RunOptions, EXIT_INPUT};
use flatgroup::crystal::DEFAULT_CAP;
use flatgroup::module_rank::DEFAULT_BUDGET;

/// Crystallographic and Bieberbach groups: validation, torsion, module ranks
/// and small verified generating sets.
///
/// Exit codes: 0 success or affirmative answer, 1 negative answer or bound
/// violation, 2 input error.
#[derive(Parser)]
#[command(name = "flatgroup", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest holonomy group to enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Span checks allowed in each module rank search.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Seed for the search order.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a group file, enumerate the holonomy and normalize the lattice.
    Validate { file: PathBuf },
    /// Decide torsion-freeness, printing a finite-order element if any.
    CheckTorsion { file: PathBuf },
    /// Build a verified generating set.
    Reduce {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodChoice::Auto)]
        method: MethodChoice,
    },
    /// Check whether a set of elements generates the group.
    Verify {
        file: PathBuf,
        #[arg(long)]
        set: PathBuf,
    },
    /// Invariants, applicable theorem bounds and the best construction.
    Bounds { file: PathBuf },
    /// Run everything on the bundled corpus.
    Corpus {
        #[arg(long, default_value = "all")]
        run: String,
    },
}

fn read(path: &Path) -> Result<String, Outcome> {
    std::fs::read_to_string(path).map_err(|e| Outcome {
        code: EXIT_INPUT,
        stdout: String::new(),
        stderr: format!("error: {}: {e}\n", path.display()),
    })
}

fn run(cli: Cli) -> Outcome {
    let opts = RunOptions { json: cli.json, cap: cli.cap, budget: cli.budget, seed: cli.seed };
    let result = (|| {
        Ok(match cli.command {
            Command::Validate { file } => cli::cmd_validate(&read(&file)?, &opts),
            Command::CheckTorsion { file } => cli::cmd_check_torsion(&read(&file)?, &opts),
            Command::Reduce { file, method } => cli::cmd_reduce(&read(&file)?, method, &opts),
            Command::Verify { file, set } => cli::cmd_verify(&read(&file)?, &read(&set)?, &opts),
            Command::Bounds { file } => cli::cmd_bounds(&read(&file)?, &opts),
            Command::Corpus { run } => cli::cmd_corpus(&run, &opts),
        })
    })();
    result.unwrap_or_else(|o| o)
}

fn main() -> ExitCode {
    let out = run(Cli::parse());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
