use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use residua::SemiringTag;
use residua_cli::problem::{interval_vector, point_vector, ProblemData};
use residua_cli::{parse_problem, run_check, run_residuate, run_solve_eq, CliError, Problem};

/// Exact residuation and two-sided solving over idempotent semirings.
#[derive(Parser)]
#[command(name = "residua", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Problem file (JSON)
    file: PathBuf,
    /// Write the result here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Override the file's semiring (maxplus | maxmin)
    #[arg(long)]
    semiring: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the greatest X with A ⊗ X ⪯ B and whether equality is reached
    Residuate {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Iterate Π to solve A ⊗ x = B ⊗ y
    SolveEq {
        #[command(flatten)]
        common: CommonArgs,
        /// Iteration cap (default 10000)
        #[arg(long)]
        max_iter: Option<u64>,
        /// File holding the starting vector (JSON array)
        #[arg(long)]
        x0: Option<PathBuf>,
        /// Record every iterate in the result
        #[arg(long)]
        trace: bool,
    },
    /// Evaluate both sides of A ⊗ x = B ⊗ y for a supplied pair
    Check {
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn load_problem(common: &CommonArgs) -> Result<Problem, CliError> {
    let text = fs::read_to_string(&common.file)?;
    let semiring = common
        .semiring
        .as_deref()
        .map(str::parse::<SemiringTag>)
        .transpose()?;
    parse_problem(&text, semiring)
}

fn apply_solve_flags(
    problem: &mut Problem,
    max_iter: Option<u64>,
    x0: Option<&PathBuf>,
    trace: bool,
) -> Result<(), CliError> {
    if let Some(n) = max_iter {
        if n == 0 {
            return Err(CliError::Parse("--max-iter must be a positive integer".into()));
        }
        problem.max_iter =
            Some(usize::try_from(n).map_err(|_| CliError::Parse("--max-iter out of range".into()))?);
    }
    if trace {
        problem.trace = true;
    }
    if let Some(path) = x0 {
        let text = fs::read_to_string(path)?;
        let entries: Vec<serde_json::Value> = serde_json::from_str(&text)?;
        match &mut problem.data {
            ProblemData::Point { x0, .. } => *x0 = Some(point_vector(problem.semiring, &entries)?),
            ProblemData::Interval { x0, .. } => {
                *x0 = Some(interval_vector(problem.semiring, &entries)?)
            }
        }
    }
    Ok(())
}

fn emit(result: &serde_json::Value, out: Option<&PathBuf>) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(result)?;
    text.push('\n');
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Residuate { common } => {
            let problem = load_problem(common)?;
            emit(&run_residuate(&problem)?, common.out.as_ref())
        }
        Command::SolveEq { common, max_iter, x0, trace } => {
            let mut problem = load_problem(common)?;
            apply_solve_flags(&mut problem, *max_iter, x0.as_ref(), *trace)?;
            emit(&run_solve_eq(&problem)?, common.out.as_ref())
        }
        Command::Check { common } => {
            let problem = load_problem(common)?;
            emit(&run_check(&problem)?, common.out.as_ref())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("residua: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
