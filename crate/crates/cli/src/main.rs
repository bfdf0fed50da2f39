//! `steinerlab`: Steiner distances, extremal constructions and exhaustive
//! search from the command line.

mod args;
mod compute;
mod construct;
mod search;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use steinerlab_core::constructions::ConstructionError;
use steinerlab_core::extremal::ExtremalError;

#[derive(Debug, Parser)]
#[command(name = "steinerlab", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a Steiner or connectivity quantity for each input graph.
    Compute(compute::ComputeArgs),
    /// Build an extremal construction and check its claimed properties.
    Construct(construct::ConstructArgs),
    /// Exact e_k(n, l, d) by exhaustive search.
    Search(search::SearchArgs),
    /// Reconcile closed forms with brute force, or check characterizations.
    Verify(verify::VerifyArgs),
    /// Tabulate e_k(n, l, d) for every parameter at the given orders.
    Sweep(search::SweepArgs),
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<args::Usage>().is_some() {
        return 2;
    }
    if let Some(e) = err.downcast_ref::<ExtremalError>() {
        return match e {
            ExtremalError::UnsupportedOrder { .. } => 3,
            ExtremalError::InvalidQuery(_) => 2,
        };
    }
    if let Some(ConstructionError::Precondition { .. }) = err.downcast_ref::<ConstructionError>() {
        return 2;
    }
    1
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute(a) => compute::run(a),
        Command::Construct(a) => construct::run(a),
        Command::Search(a) => search::run(a),
        Command::Verify(a) => verify::run(a),
        Command::Sweep(a) => search::sweep(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
