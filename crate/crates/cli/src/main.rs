//! `specht`: enumerate tableaux, print branching filtrations and run the
//! verification suites.
//!
//! Exit codes: 0 when everything checked passes, 1 when a suite reports a
//! violation, 2 for usage errors.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "specht", version, about = "Graded Specht module combinatorics and cyclotomic Hecke algebra checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List standard tableaux with residues, degrees and codegrees.
    Enumerate(EnumerateArgs),
    /// Print the graded Specht filtration of an induced module.
    Branch(BranchArgs),
    /// Run a verification suite and print its JSON report.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Quiver {
    /// Quantum characteristic e (0 or at least 2).
    #[arg(long, default_value_t = 0)]
    pub e: u32,
    /// Level ℓ; defaults to the length of --charge, or 1.
    #[arg(long)]
    pub level: Option<usize>,
    /// Multicharge κ as a comma list, e.g. 3,0. Defaults to all zeros.
    #[arg(long, allow_hyphen_values = true)]
    pub charge: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// ξ = 2 over the rationals with content-separating charges.
    Rational,
    /// ξ = 1 over F_p.
    Prime,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub quiver: Quiver,
    /// A single size n.
    #[arg(long, conflicts_with = "n_max")]
    pub n: Option<usize>,
    /// All sizes 0..=n-max, in order.
    #[arg(long)]
    pub n_max: Option<usize>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct BranchArgs {
    #[command(flatten)]
    pub quiver: Quiver,
    /// Source multipartition, e.g. "2,1|1", "(1|-)" or [[1],[]].
    #[arg(long, allow_hyphen_values = true)]
    pub shape: String,
    /// The residue i to induce by.
    #[arg(long, allow_hyphen_values = true)]
    pub residue: i64,
    /// Print the dual filtration of the same module instead.
    #[arg(long)]
    pub dual: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// combinatorics, counting, dominance, strong, tilting, lk-action,
    /// mlambda, klr or cross-model.
    #[arg(long)]
    pub suite: String,
    #[command(flatten)]
    pub quiver: Quiver,
    /// Rank for the algebra suites.
    #[arg(long, conflicts_with = "n_max")]
    pub n: Option<usize>,
    /// Largest rank for the combinatorial suites.
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long, value_enum, default_value_t = Mode::Rational)]
    pub mode: Mode,
    /// The prime for --mode prime.
    #[arg(long)]
    pub p: Option<u64>,
    #[command(flatten)]
    pub output: Output,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Enumerate(a) => commands::enumerate(&a),
        Command::Branch(a) => commands::branch(&a),
        Command::Verify(a) => commands::verify(&a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(commands::Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(commands::Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
