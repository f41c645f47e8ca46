//! `bperf`: recognise, colour and find cliques in b-perfect graphs.
//!
//! Exit codes: 0 success or "yes", 1 "no", 2 bad input, 3 the input is not
//! b-perfect where the command requires it.

mod commands;
mod input;
mod report;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use bperfect::Format;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "bperf",
    version,
    about = "Recognition, colouring and maximum cliques for b-perfect graphs"
)]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
pub struct InputArgs {
    /// Input file; standard input when absent or `-`.
    pub input: Option<PathBuf>,
    /// graph6 (one graph per line), dimacs, or edgelist.
    #[arg(long, short, default_value = "graph6")]
    pub format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CliqueMethod {
    Structural,
    ModuleTree,
    Oracle,
}

#[derive(Subcommand)]
enum Command {
    /// Decide b-perfection by searching for the 22 forbidden subgraphs.
    Recognize {
        #[command(flatten)]
        input: InputArgs,
        /// Also decide it by brute force (small graphs only).
        #[arg(long)]
        oracle: bool,
    },
    /// Colour with the b-greedy procedure.
    Color {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated vertex order for the first-fit pass.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
        /// Exit 3 on graphs that are not b-perfect instead of warning.
        #[arg(long)]
        require_b_perfect: bool,
        /// Also report exact chromatic and b-chromatic numbers.
        #[arg(long)]
        oracle: bool,
    },
    /// Find a maximum clique.
    Clique {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "structural")]
        method: CliqueMethod,
        /// Run the structural methods without checking b-perfection first.
        #[arg(long)]
        unsafe_skip_check: bool,
    },
    /// Check a graph6 stream against the brute-force oracles.
    Verify {
        /// graph6 stream; standard input when absent or `-`.
        input: Option<PathBuf>,
        /// Lines with more vertices are reported as errors and skipped.
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
    /// Print the forbidden family as graph6.
    Family {
        /// Append the two six-vertex boats.
        #[arg(long)]
        boats: bool,
        /// Check that every member is minimally b-imperfect.
        #[arg(long)]
        selfcheck: bool,
    },
    /// Print every graph on 1 to N vertices up to isomorphism, as graph6.
    Enumerate {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
    /// Print random b-perfect graphs as graph6.
    Sample {
        #[arg(long, short)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Show the modular decomposition tree.
    Modules {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Find a small boat and grow it into a special boat partition.
    Boat {
        #[command(flatten)]
        input: InputArgs,
    },
}

/// A run that could not produce its normal report.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Guard(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    let result = match cli.command {
        Command::Recognize { input, oracle } => commands::recognize(&input, oracle, json),
        Command::Color {
            input,
            order,
            require_b_perfect,
            oracle,
        } => commands::color(&input, order.as_deref(), require_b_perfect, oracle, json),
        Command::Clique {
            input,
            method,
            unsafe_skip_check,
        } => commands::clique(&input, method, unsafe_skip_check, json),
        Command::Verify { input, max_n } => verify::run(input.as_deref(), max_n, json),
        Command::Family { boats, selfcheck } => commands::family(boats, selfcheck, json),
        Command::Enumerate { max_n } => commands::enumerate(max_n),
        Command::Sample { n, count, seed } => commands::sample(n, count, seed),
        Command::Modules { input } => commands::modules(&input, json),
        Command::Boat { input } => commands::boat(&input, json),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
