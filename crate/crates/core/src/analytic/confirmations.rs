use super::attack::{attack_success, AttackQuery, Variant};
use super::power::MiningPowerSplit;
use super::probability::Probability;
use crate::error::{Error, Result};

/// Largest confirmation depth [`min_confirmations`] will try.
pub const MIN_CONFIRMATIONS_SEARCH_CAP: u64 = 10_000;

/// Smallest `z` whose attack-success probability is at most `target`.
///
/// `Ok(None)` means no finite depth works: the attacker holds at least half of
/// the mining power (unbudgeted variants), or nothing up to
/// [`MIN_CONFIRMATIONS_SEARCH_CAP`] qualifies.
pub fn min_confirmations(
    power: MiningPowerSplit,
    target: Probability,
    variant: Variant,
    budget_surplus: u64,
) -> Result<Option<u64>> {
    min_confirmations_capped(
        power,
        target,
        variant,
        budget_surplus,
        MIN_CONFIRMATIONS_SEARCH_CAP,
    )
}

/// [`min_confirmations`] with an explicit search cap.
pub fn min_confirmations_capped(
    power: MiningPowerSplit,
    target: Probability,
    variant: Variant,
    budget_surplus: u64,
    cap: u64,
) -> Result<Option<u64>> {
    let t = target.value();
    if !(t > 0.0 && t < 1.0) {
        return Err(Error::InvalidTarget(t));
    }
    if variant != Variant::Budgeted && power.attacker_dominates() {
        return Ok(None);
    }
    for z in 0..=cap {
        let query = AttackQuery::new(power, z, variant, budget_surplus)?;
        if attack_success(&query) <= target {
            return Ok(Some(z));
        }
    }
    Ok(None)
}
