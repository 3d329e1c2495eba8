//! Command-line grammar. Every verb takes one input, either a positional
//! type name or `--cartan FILE` (mutually exclusive, one required), plus a
//! format selector; `verify` adds the suite flags and a thread count.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "chevalley",
    version,
    about = "Exact Chevalley bases, canonical splittings, and structure constants"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every root: coordinates, coroot, squared length, height, depth.
    Roots(CommonArgs),
    /// Per-root basis data: γ factors, depths, segment signs, frame signs.
    Basis(CommonArgs),
    /// All structure constants, one canonical ordered triple per row.
    Table(CommonArgs),
    /// Recompute and check the defining identities; exit 0 only on success.
    Verify(VerifyArgs),
}

impl Command {
    pub fn common(&self) -> &CommonArgs {
        match self {
            Command::Roots(c) | Command::Basis(c) | Command::Table(c) => c,
            Command::Verify(v) => &v.common,
        }
    }
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Named type: A1…, B2…, C2…, D3…, E6-E8, F4, G2.
    #[arg(value_name = "TYPE", required_unless_present = "cartan", conflicts_with = "cartan")]
    pub type_name: Option<String>,

    /// Cartan matrix file: the rank, then rank×rank integer entries,
    /// whitespace-separated.
    #[arg(long, value_name = "FILE")]
    pub cartan: Option<PathBuf>,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the output to a file instead of stdout.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Jacobi identity over the whole basis (exhaustive or sampled).
    #[arg(long)]
    pub jacobi: bool,

    /// Every constant against integer matrix commutators (types A and C).
    #[arg(long)]
    pub oracle: bool,

    /// Splitting homomorphism, squares, and sign theorems, with the
    /// τ-character and height identities.
    #[arg(long)]
    pub splitting: bool,

    /// Root-string lengths and structure-constant symmetries.
    #[arg(long)]
    pub strings: bool,

    /// Worker threads for the sweeps (default: available parallelism).
    #[arg(long, value_name = "N")]
    pub threads: Option<usize>,
}

impl VerifyArgs {
    /// True when no suite was singled out, meaning all applicable ones run.
    pub fn run_all(&self) -> bool {
        !(self.jacobi || self.oracle || self.splitting || self.strings)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}
