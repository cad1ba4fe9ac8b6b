use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "dioph",
    version,
    about = "Parametric solution families for xy = z^n, xyz = w^2 and {xy = v^2, yz = w^2}"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Test whether a tuple solves an equation.
    Check(TupleArgs),
    /// Recover the canonical parameters of a solution.
    Extract {
        #[command(flatten)]
        tuple: TupleArgs,
        /// Also print every intermediate value of the extraction.
        #[arg(long)]
        trace: bool,
    },
    /// Build a solution from named parameters, e.g. `construct pow3 d=1 v1=2 v2=1 m=1 l=1`.
    Construct(TupleArgs),
    /// List every solution up to a bound.
    Enumerate(RunArgs),
    /// Compare brute-force and parametric enumeration and write a certificate.
    Verify(RunArgs),
    /// Check random parameter tuples of every family.
    Stress(StressArgs),
}

/// Equation plus a list of values, for single-tuple commands.
///
/// The equation is either given with `--equation` or as the first positional.
#[derive(Debug, Args)]
pub struct TupleArgs {
    #[arg(long)]
    pub equation: Option<String>,
    /// `k` of xy = k·z^n (general-k only).
    #[arg(long)]
    pub k: Option<String>,
    /// `n` of xy = k·z^n (general-k only).
    #[arg(long)]
    pub n: Option<u32>,
    /// [EQUATION] followed by the tuple's values (or NAME=VALUE parameters).
    #[arg(required = true)]
    pub values: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Brute,
    Parametric,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Jsonl,
    Csv,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long)]
    pub equation: String,
    #[arg(long)]
    pub bound: u64,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long)]
    pub n: Option<u32>,
    /// Defaults to `brute` for enumerate and `both` for verify.
    #[arg(long, value_enum)]
    pub method: Option<MethodArg>,
    #[arg(long, value_enum, default_value = "jsonl")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: u64,
    #[arg(long, default_value_t = dioph_core::enumeration::DEFAULT_CAP, value_parser = clap::value_parser!(u64).range(1..))]
    pub cap: u64,
}

#[derive(Debug, Args)]
pub struct StressArgs {
    /// Restrict to one family; all eight by default.
    #[arg(long)]
    pub equation: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Samples per family.
    #[arg(long, default_value_t = 1000)]
    pub count: u64,
    /// Largest parameter value drawn.
    #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
    pub limit: u64,
    /// Build the system's v without its factor r, to show that xy = v² then fails.
    #[arg(long)]
    pub paper_v: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
