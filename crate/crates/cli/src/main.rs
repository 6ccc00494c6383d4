//! `paley4`: construct, verify and search Paley 4-graphs and tournament
//! 4-graphs.
//!
//! Exit codes: 0 success, 1 property violation, 2 input error, 3 search
//! budget exceeded.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

#[derive(Parser, Debug)]
#[command(
    name = "paley4",
    version,
    about = "Paley 4-graphs, tournaments and design verifiers"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct GlobalArgs {
    /// Field characteristic.
    #[arg(long, global = true)]
    pub p: Option<u32>,
    /// Extension degree (default 1).
    #[arg(long, global = true)]
    pub ell: Option<usize>,
    /// Monic modulus coefficients, constant term first, comma separated.
    #[arg(long, global = true, value_delimiter = ',')]
    pub modulus: Option<Vec<u64>>,
    /// Field order; prime powers use the built-in modulus table.
    #[arg(long, global = true)]
    pub q: Option<u64>,
    /// Output file for constructed data (default: stdout).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Write the run report as JSON to this file.
    #[arg(long, global = true)]
    pub report_out: Option<PathBuf>,
    /// Worker threads for parallel scans (default: available parallelism).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a reference object and write it in text format.
    Construct {
        #[arg(value_enum)]
        kind: Kind,
    },
    /// Check structural properties of a hypergraph file.
    Verify(VerifyArgs),
    /// The 4-graph H_T of a tournament file.
    Baber { input: PathBuf },
    /// Switch a tournament with respect to a vertex set.
    Switch {
        input: PathBuf,
        /// Comma-separated vertices; may be empty.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        subset: Vec<usize>,
    },
    /// Decide whether two tournaments are switching equivalent.
    SwitchEquiv { first: PathBuf, second: PathBuf },
    /// Search for a tournament T with H_T equal to a 4-graph.
    Realize {
        input: PathBuf,
        /// Maximum number of search nodes.
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
    },
    /// Isomorphism invariants of a 4-graph.
    Fingerprint { input: PathBuf },
    /// Mean edge density of H_T over seeded random tournaments.
    Density {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 200)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    PaleyHypergraph,
    PaleyTournament,
    ExtendedPaley,
    M11,
    TwoGraphExample,
    NonTournamentExample,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    pub input: PathBuf,
    /// Every (k+1)-set spans 0 or 2 edges.
    #[arg(long)]
    pub zero_or_two: bool,
    /// Every (k+1)-set spans at most 2 edges.
    #[arg(long)]
    pub at_most_two: bool,
    /// Every t-set lies in the same number of edges.
    #[arg(long, value_name = "T")]
    pub design: Option<usize>,
    /// Edge count against the de Caen bound, with the equality condition.
    #[arg(long)]
    pub de_caen: bool,
    /// Every 4-set spans an even number of triples (k = 3).
    #[arg(long)]
    pub two_graph: bool,
    /// The edge-intersection graph is regular with edge-disjoint triangles.
    #[arg(long)]
    pub gamma: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("search budget exhausted after {nodes} nodes")]
    Budget { nodes: u64 },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Budget { .. } => 3,
        }
    }
}

/// Whether the requested properties held.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    Violation,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: cannot configure thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Violation) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
