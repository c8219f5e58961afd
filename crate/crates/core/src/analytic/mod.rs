//! Closed-form attack model: Gambler's Ruin catch-up probabilities, the
//! Poisson model of attacker progress, and the attack-success sums built from
//! them.

mod attack;
mod confirmations;
mod numeric;
mod poisson;
mod power;
mod probability;
mod ruin;

pub use attack::{
    attack_breakdown, attack_success, reweighted_attack_success, AttackBreakdown, AttackQuery,
    AttackTerm, Variant, DEFAULT_BUDGET_SURPLUS,
};
pub use confirmations::{
    min_confirmations, min_confirmations_capped, MIN_CONFIRMATIONS_SEARCH_CAP,
};
pub use poisson::{poisson_pmf, poisson_rate, PoissonRate};
pub use power::{MiningPowerSplit, EVEN_ODDS_TOLERANCE};
pub use probability::{Probability, GUARD_BAND};
pub use ruin::{catch_up_limited, catch_up_unlimited, ruin_win_probability, RuinGameSpec};
