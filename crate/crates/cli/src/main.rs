//! Experiment harness around the `hyperpath` crate: instance generation,
//! static solving, dynamic replay with either maintenance algorithm,
//! verified runs, benchmark sweeps and email-log analysis.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification mismatch, 3 I/O or
//! malformed input.

use clap::error::ErrorKind;
use clap::Parser;

mod bench;
mod enron;
mod generate;
mod replay;
mod solve;
mod util;

#[derive(Parser)]
#[command(name = "hyperpath", version, about = "Dynamic shortest hyperpaths: generate, solve, replay, bench")]
enum Cli {
    /// Generate a random geometric hypergraph instance (and optionally a
    /// pre-drawn random change sequence).
    Generate(generate::Args),
    /// Solve the static single-source problem and print `v dist parent via`.
    Sssp(solve::Args),
    /// Replay a dynamic change sequence, emitting one CSV row per event.
    Run(replay::Args),
    /// Sweep both algorithms over both change models and report mean
    /// per-event times.
    Bench(bench::Args),
    /// Ingest an email log, replay it as a dynamic sequence and rank actors
    /// by closeness.
    Enron(enron::Args),
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let result = match cli {
        Cli::Generate(args) => generate::run(args),
        Cli::Sssp(args) => solve::run(args),
        Cli::Run(args) => replay::run(args),
        Cli::Bench(args) => bench::run(args),
        Cli::Enron(args) => enron::run(args),
    };
    match result {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
