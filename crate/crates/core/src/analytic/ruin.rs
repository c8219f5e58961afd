//! Gambler's Ruin and the catch-up probabilities derived from it.

use super::numeric::{geometric_ratio, ratio_pow};
use super::power::MiningPowerSplit;
use super::probability::Probability;
use crate::error::{Error, Result};

/// A finite Gambler's Ruin game: start with `fortune` dollars, bet $1 at a
/// time, winning each bet with probability `odds.attacker()`, until reaching
/// either $0 (loss) or `target` dollars (win).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RuinGameSpec {
    fortune: u64,
    target: u64,
    odds: MiningPowerSplit,
}

impl RuinGameSpec {
    pub fn new(fortune: u64, target: u64, odds: MiningPowerSplit) -> Result<Self> {
        if target == 0 || fortune > target {
            return Err(Error::InvalidRuinGame { fortune, target });
        }
        Ok(Self {
            fortune,
            target,
            odds,
        })
    }

    pub fn fortune(&self) -> u64 {
        self.fortune
    }

    pub fn target(&self) -> u64 {
        self.target
    }

    pub fn odds(&self) -> MiningPowerSplit {
        self.odds
    }
}

/// Probability that the gambler reaches `target` before going bankrupt:
/// `(1 - (p/q)^i) / (1 - (p/q)^N)`, or `i / N` for an even game.
pub fn ruin_win_probability(game: &RuinGameSpec) -> Probability {
    let (i, n) = (game.fortune, game.target);
    if i == 0 {
        return Probability::ZERO;
    }
    if i == n {
        return Probability::ONE;
    }
    let odds = game.odds;
    let raw = if odds.is_even() {
        i as f64 / n as f64
    } else {
        let ln_loss_to_win = (odds.honest() / odds.attacker()).ln();
        geometric_ratio(ln_loss_to_win, i, n)
    };
    Probability::from_computed(raw)
}

/// Probability that an attacker `deficit` blocks behind ever draws level,
/// with unlimited resources: `1` when `p <= q`, else `(q/p)^deficit`.
pub fn catch_up_unlimited(deficit: u64, power: MiningPowerSplit) -> Probability {
    if power.attacker_dominates() {
        return Probability::ONE;
    }
    Probability::from_computed(ratio_pow(power.attacker_ratio(), deficit))
}

/// Catch-up probability for an attacker who abandons the race once `budget`
/// blocks further behind than where they started.
///
/// This is the ruin game with fortune `budget` and goal `budget + deficit`.
/// A zero budget is rejected: the attacker would begin already bankrupt.
pub fn catch_up_limited(deficit: u64, budget: u64, power: MiningPowerSplit) -> Result<Probability> {
    if budget == 0 {
        return Err(Error::ZeroBudget);
    }
    let game = RuinGameSpec::new(budget, budget + deficit, power)?;
    Ok(ruin_win_probability(&game))
}
