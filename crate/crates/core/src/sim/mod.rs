//! Monte Carlo simulation of the double-spend race.

mod runner;
mod stream;
mod trial;

pub use runner::{
    binomial_std_err, empirical_catch_up, empirical_k_distribution, run_trials, KDistribution,
    Proportion, SimulationResult,
};
pub use stream::{derive_seed, StreamDomain, Substreams};
pub use trial::{simulate_trial, TrialConfig, TrialRecord, DEFAULT_MAX_BLOCKS};
