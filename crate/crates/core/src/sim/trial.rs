//! A single simulated double-spend race.
//!
//! Every block is won by the attacker with probability `q`, independently. The
//! race has two phases:
//!
//! 1. **Wait.** The merchant waits for `z` honest blocks. The attacker mines
//!    `k` blocks on a private chain meanwhile.
//! 2. **Chase.** The attacker must end strictly ahead, so starts `z + 1 - k`
//!    blocks behind (an immediate win if that is not positive). Each attacker
//!    block closes the gap by one and each honest block widens it by one. The
//!    attacker wins when the gap reaches zero and quits once it has grown by
//!    `z + budget_surplus - k` blocks.

use rand::distr::{Bernoulli, Distribution};
use rand::Rng;

use crate::analytic::{MiningPowerSplit, DEFAULT_BUDGET_SURPLUS};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_BLOCKS: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialConfig {
    power: MiningPowerSplit,
    z: u64,
    budget_surplus: u64,
    max_blocks: u64,
}

impl TrialConfig {
    pub fn new(power: MiningPowerSplit, z: u64, budget_surplus: u64) -> Result<Self> {
        if budget_surplus == 0 {
            return Err(Error::ZeroBudgetSurplus);
        }
        Ok(Self {
            power,
            z,
            budget_surplus,
            max_blocks: DEFAULT_MAX_BLOCKS,
        })
    }

    /// Default budget surplus of 35.
    pub fn with_default_budget(power: MiningPowerSplit, z: u64) -> Self {
        Self::new(power, z, DEFAULT_BUDGET_SURPLUS).expect("default surplus is positive")
    }

    pub fn with_max_blocks(mut self, max_blocks: u64) -> Result<Self> {
        if max_blocks == 0 {
            return Err(Error::ZeroMaxBlocks);
        }
        self.max_blocks = max_blocks;
        Ok(self)
    }

    pub fn power(&self) -> MiningPowerSplit {
        self.power
    }

    pub fn z(&self) -> u64 {
        self.z
    }

    pub fn budget_surplus(&self) -> u64 {
        self.budget_surplus
    }

    pub fn max_blocks(&self) -> u64 {
        self.max_blocks
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrialRecord {
    /// Attacker blocks mined while the merchant waited.
    pub k_during_wait: u64,
    pub attacker_won: bool,
    /// Total blocks drawn across both phases.
    pub blocks_elapsed: u64,
    /// The block cap was hit before the race was decided.
    pub capped: bool,
}

pub(crate) fn coin(power: MiningPowerSplit) -> Bernoulli {
    Bernoulli::new(power.attacker()).expect("attacker share lies in (0, 1)")
}

pub(crate) struct Wait {
    pub k: u64,
    pub capped: bool,
}

/// Draws blocks until `z` honest ones have appeared.
pub(crate) fn wait_phase<R: Rng + ?Sized>(
    rng: &mut R,
    coin: &Bernoulli,
    z: u64,
    blocks: &mut u64,
    max_blocks: u64,
) -> Wait {
    let (mut k, mut honest) = (0, 0);
    while honest < z {
        if *blocks >= max_blocks {
            return Wait { k, capped: true };
        }
        *blocks += 1;
        if coin.sample(rng) {
            k += 1;
        } else {
            honest += 1;
        }
    }
    Wait { k, capped: false }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Chase {
    Won,
    Lost,
    Capped,
}

/// Random walk from `deficit` (>= 1) until it hits 0 (won) or
/// `deficit + budget` (lost).
pub(crate) fn chase<R: Rng + ?Sized>(
    rng: &mut R,
    coin: &Bernoulli,
    deficit: u64,
    budget: u64,
    blocks: &mut u64,
    max_blocks: u64,
) -> Chase {
    debug_assert!(deficit >= 1 && budget >= 1);
    let give_up_at = deficit + budget;
    let mut gap = deficit;
    loop {
        if *blocks >= max_blocks {
            return Chase::Capped;
        }
        *blocks += 1;
        if coin.sample(rng) {
            gap -= 1;
            if gap == 0 {
                return Chase::Won;
            }
        } else {
            gap += 1;
            if gap == give_up_at {
                return Chase::Lost;
            }
        }
    }
}

/// Runs one race on `rng`.
pub fn simulate_trial<R: Rng + ?Sized>(rng: &mut R, config: &TrialConfig) -> TrialRecord {
    let coin = coin(config.power);
    let mut blocks = 0;
    let wait = wait_phase(rng, &coin, config.z, &mut blocks, config.max_blocks);
    let k = wait.k;
    if wait.capped {
        return TrialRecord {
            k_during_wait: k,
            attacker_won: false,
            blocks_elapsed: blocks,
            capped: true,
        };
    }
    let needed = config.z + 1;
    if k >= needed {
        return TrialRecord {
            k_during_wait: k,
            attacker_won: true,
            blocks_elapsed: blocks,
            capped: false,
        };
    }
    let deficit = needed - k;
    let budget = config.z + config.budget_surplus - k;
    let outcome = chase(rng, &coin, deficit, budget, &mut blocks, config.max_blocks);
    TrialRecord {
        k_during_wait: k,
        attacker_won: outcome == Chase::Won,
        blocks_elapsed: blocks,
        capped: outcome == Chase::Capped,
    }
}
