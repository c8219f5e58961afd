//! Probability that a double-spend attack on a proof-of-work chain succeeds.
//!
//! * [`analytic`]: closed-form model. Gambler's Ruin catch-up probabilities,
//!   the Poisson model of attacker progress during the merchant's wait, the
//!   original, corrected and budgeted attack-success sums, and the smallest
//!   safe confirmation depth.
//! * [`sim`]: Monte Carlo simulation of the race with deterministic
//!   per-trial random streams.
//! * [`validation`]: grid sweeps comparing the two, and attribution of the
//!   residual error to the model's components.
//!
//! ```
//! use doublespend::{attack_success, AttackQuery, MiningPowerSplit};
//!
//! let power = MiningPowerSplit::new(0.1).unwrap();
//! let p = attack_success(&AttackQuery::corrected(power, 6));
//! assert!(p.value() < 1e-3);
//! ```

pub mod analytic;
mod error;
pub mod sim;
pub mod validation;

pub use analytic::{
    attack_breakdown, attack_success, catch_up_limited, catch_up_unlimited, min_confirmations,
    poisson_pmf, poisson_rate, ruin_win_probability, AttackBreakdown, AttackQuery, AttackTerm,
    MiningPowerSplit, PoissonRate, Probability, RuinGameSpec, Variant, DEFAULT_BUDGET_SURPLUS,
};
pub use error::{Error, Result};
pub use sim::{
    empirical_catch_up, empirical_k_distribution, run_trials, simulate_trial, SimulationResult,
    TrialConfig, TrialRecord,
};
pub use validation::{
    component_attribution, run_validation, AttributionReport, SweepGrid, ValidationRow,
};
