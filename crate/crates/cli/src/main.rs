//! `latticeforms`: counting, enumeration, verification and Yang-Baxter
//! analysis for six- and eight-vertex lattice models.
//!
//! Exit codes: 0 on success, 1 when a verification fails (the report carries
//! a counterexample), 2 on usage or input errors.

mod error;
mod inputs;
mod lattice;
mod output;
mod verify;
mod ybe;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use latticeforms::SizeGuard;

use crate::error::{CliError, CliResult};
use crate::output::{render, Format, Output};

#[derive(Debug, Parser)]
#[command(
    name = "latticeforms",
    version,
    about = "Exact enumeration and algebra for six- and eight-vertex lattice models"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Seed for randomized suites.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Lift the 2^26 limit on brute-force search spaces.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count admissible states.
    Count(lattice::CountArgs),
    /// List admissible states.
    Enumerate(lattice::EnumerateArgs),
    /// Run a property suite.
    #[command(subcommand)]
    Verify(verify::VerifyCommand),
    /// Yang-Baxter commutator, conditions and solver.
    #[command(subcommand)]
    Ybe(ybe::YbeCommand),
    /// Exact partition function for given weights.
    Partition(lattice::PartitionArgs),
}

fn dispatch(cli: &Cli) -> CliResult<Output> {
    let guard = if cli.force { SizeGuard::unlimited() } else { SizeGuard::default() };
    match &cli.command {
        Command::Count(a) => lattice::count(a, guard),
        Command::Enumerate(a) => lattice::enumerate(a, guard),
        Command::Verify(c) => verify::run(c, cli.seed, guard),
        Command::Ybe(c) => ybe::run(c),
        Command::Partition(a) => lattice::partition(a, guard),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = dispatch(&cli).and_then(|out| {
        let stdout = std::io::stdout();
        let mut lock = stdout.lock();
        render(&out, cli.format, &mut lock)?;
        lock.flush().ok();
        Ok(out.ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, CliError::Lib(latticeforms::Error::SizeGuard { .. })) {
                eprintln!("rerun with --force to lift the limit");
            }
            ExitCode::from(2)
        }
    }
}
