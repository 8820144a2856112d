//! discrimkit: optimal discrimination of quantum states from the command
//! line. Subcommands cover the four figures of merit (minimum error,
//! unambiguous, maximum confidence, mutual information), Monte Carlo
//! sampling, and the self-verification suite.
//!
//! Angles are degrees on the flags and radians inside; tables render to CSV
//! or JSON with identical 12-digit decimal strings in both. Exit codes:
//! 0 success, 2 invalid input, 3 optimizer non-convergence, and 1 from
//! `verify` when a check fails.

mod commands;
mod output;
mod scenario;

use clap::{Parser, Subcommand};

use commands::{
    emit, run_maxconf, run_minerr, run_mutinfo, run_simulate, run_unamb, run_verify, MaxconfArgs,
    MinerrArgs, MutinfoArgs, SimulateArgs, UnambArgs, VerifyArgs,
};
use scenario::CliResult;

#[derive(Parser)]
#[command(
    name = "discrimkit",
    version,
    about = "Optimal discrimination of quantum states",
    long_about = "Optimal discrimination of quantum states: minimum-error, unambiguous, \
                  maximum-confidence, and mutual-information measurements over finite \
                  ensembles, with closed forms cross-checked by independent oracles."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum-error measurement and its error probability.
    Minerr(MinerrArgs),
    /// Unambiguous discrimination: zero errors, explicit inconclusive rate.
    Unamb(UnambArgs),
    /// Maximum-confidence measurement per outcome.
    Maxconf(MaxconfArgs),
    /// Mutual information of measurement strategies.
    Mutinfo(MutinfoArgs),
    /// Monte Carlo sampling of a strategy on an ensemble.
    Simulate(SimulateArgs),
    /// Run the numerical self-checks and report each against its tolerance.
    Verify(VerifyArgs),
}

fn dispatch(cmd: &Command) -> CliResult<i32> {
    match cmd {
        Command::Minerr(a) => {
            emit(&run_minerr(a)?, &a.output)?;
            Ok(0)
        }
        Command::Unamb(a) => {
            emit(&run_unamb(a)?, &a.output)?;
            Ok(0)
        }
        Command::Maxconf(a) => {
            emit(&run_maxconf(a)?, &a.output)?;
            Ok(0)
        }
        Command::Mutinfo(a) => {
            emit(&run_mutinfo(a)?, &a.output)?;
            Ok(0)
        }
        Command::Simulate(a) => {
            emit(&run_simulate(a)?, &a.output)?;
            Ok(0)
        }
        Command::Verify(a) => {
            let (report, code) = run_verify(a)?;
            print!("{report}");
            Ok(code)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match dispatch(&cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.code()
        }
    };
    std::process::exit(code);
}
