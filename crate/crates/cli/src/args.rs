use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use doublespend::{Variant, DEFAULT_BUDGET_SURPLUS};

pub const SEED_ENV: &str = "DOUBLESPEND_SEED";
pub const DEFAULT_SEED: u64 = 20_190_101;
pub const DEFAULT_TRIALS: u64 = 100_000;
pub const DEFAULT_TARGETS: [f64; 4] = [0.001, 0.01, 0.1, 0.5];

#[derive(Debug, Parser)]
#[command(
    name = "doublespend",
    version,
    about = "Double-spend attack model, simulator and validation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Worker threads for simulations (default: one per core). Results do not
    /// depend on this.
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Original,
    Corrected,
    Budgeted,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Original => Variant::Original,
            VariantArg::Corrected => Variant::Corrected,
            VariantArg::Budgeted => Variant::Budgeted,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Probability that the attack succeeds.
    Prob(ProbArgs),
    /// Smallest confirmation depth keeping attack success at or below a target.
    MinZ(MinZArgs),
    /// Monte Carlo simulation of the budgeted race.
    Simulate(SimulateArgs),
    /// Model versus simulation over a (q, z) grid.
    Validate(ValidateArgs),
}

#[derive(Debug, Args)]
pub struct ProbArgs {
    /// Attacker share of mining power, in (0, 1).
    #[arg(long)]
    pub q: f64,
    /// Confirmation depth.
    #[arg(long)]
    pub z: u64,
    #[arg(long, value_enum, default_value_t = VariantArg::Corrected)]
    pub variant: VariantArg,
    #[arg(long, default_value_t = DEFAULT_BUDGET_SURPLUS)]
    pub budget_surplus: u64,
    /// Also print each term of the sum.
    #[arg(long)]
    pub summands: bool,
}

#[derive(Debug, Args)]
pub struct MinZArgs {
    /// Attacker share(s); overrides the range flags.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub q: Vec<f64>,
    #[arg(long, default_value_t = 0.02)]
    pub q_from: f64,
    #[arg(long, default_value_t = 0.48)]
    pub q_to: f64,
    #[arg(long, default_value_t = 0.02)]
    pub q_step: f64,
    /// Success-probability targets, each in (0, 1).
    #[arg(long, value_delimiter = ',', num_args = 1.., default_values_t = DEFAULT_TARGETS)]
    pub target: Vec<f64>,
    #[arg(long, value_enum, default_value_t = VariantArg::Corrected)]
    pub variant: VariantArg,
    #[arg(long, default_value_t = DEFAULT_BUDGET_SURPLUS)]
    pub budget_surplus: u64,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long)]
    pub q: f64,
    #[arg(long)]
    pub z: u64,
    #[arg(long, default_value_t = DEFAULT_BUDGET_SURPLUS)]
    pub budget_surplus: u64,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: u64,
    #[arg(long, env = SEED_ENV, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Per-trial block cap.
    #[arg(long, default_value_t = doublespend::sim::DEFAULT_MAX_BLOCKS)]
    pub max_blocks: u64,
    /// Also print the histogram of attacker blocks mined during the wait.
    #[arg(long)]
    pub histogram: bool,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[arg(long, value_delimiter = ',', num_args = 1.., default_values_t = [0.1, 0.2, 0.3, 0.4])]
    pub q: Vec<f64>,
    #[arg(long, value_delimiter = ',', num_args = 1.., default_values_t = [1u64, 3, 6, 12, 24])]
    pub z: Vec<u64>,
    /// Model variant compared against the (always budgeted) simulation.
    #[arg(long, value_enum, default_value_t = VariantArg::Budgeted)]
    pub variant: VariantArg,
    #[arg(long, default_value_t = DEFAULT_BUDGET_SURPLUS)]
    pub budget_surplus: u64,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: u64,
    #[arg(long, env = SEED_ENV, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Also emit the per-component error attribution for every cell with z >= 1.
    #[arg(long)]
    pub attribution: bool,
}
