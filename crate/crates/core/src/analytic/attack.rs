//! Probability that a double-spend attack eventually succeeds.

use std::fmt;
use std::str::FromStr;

use super::poisson::{poisson_pmf_table, poisson_rate, poisson_upper_tail, PoissonRate};
use super::power::MiningPowerSplit;
use super::probability::Probability;
use super::ruin::{catch_up_limited, catch_up_unlimited};
use crate::error::{Error, Result};

/// Budget surplus used when none is given: the attacker quits after falling
/// `z + 35 - k` blocks further behind.
pub const DEFAULT_BUDGET_SURPLUS: u64 = 35;

/// Which form of the attack-success sum to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// Attacker only needs to draw level: deficit `z - k`, unlimited budget.
    Original,
    /// Attacker must get strictly ahead: deficit `z + 1 - k`, unlimited budget.
    Corrected,
    /// As `Corrected`, but the attacker gives up after losing
    /// `z + budget_surplus - k` further blocks.
    Budgeted,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Original, Variant::Corrected, Variant::Budgeted];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Original => "original",
            Variant::Corrected => "corrected",
            Variant::Budgeted => "budgeted",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown variant `{s}`"))
    }
}

/// One point on an attack-success curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AttackQuery {
    power: MiningPowerSplit,
    z: u64,
    variant: Variant,
    budget_surplus: u64,
}

impl AttackQuery {
    /// `budget_surplus` only matters for [`Variant::Budgeted`], where it must be
    /// at least 1.
    pub fn new(
        power: MiningPowerSplit,
        z: u64,
        variant: Variant,
        budget_surplus: u64,
    ) -> Result<Self> {
        if variant == Variant::Budgeted && budget_surplus == 0 {
            return Err(Error::ZeroBudgetSurplus);
        }
        Ok(Self {
            power,
            z,
            variant,
            budget_surplus,
        })
    }

    pub fn original(power: MiningPowerSplit, z: u64) -> Self {
        Self::unbudgeted(power, z, Variant::Original)
    }

    pub fn corrected(power: MiningPowerSplit, z: u64) -> Self {
        Self::unbudgeted(power, z, Variant::Corrected)
    }

    pub fn budgeted(power: MiningPowerSplit, z: u64, budget_surplus: u64) -> Result<Self> {
        Self::new(power, z, Variant::Budgeted, budget_surplus)
    }

    fn unbudgeted(power: MiningPowerSplit, z: u64, variant: Variant) -> Self {
        Self {
            power,
            z,
            variant,
            budget_surplus: DEFAULT_BUDGET_SURPLUS,
        }
    }

    pub fn power(&self) -> MiningPowerSplit {
        self.power
    }

    pub fn z(&self) -> u64 {
        self.z
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn budget_surplus(&self) -> u64 {
        self.budget_surplus
    }

    /// Blocks the attacker must gain after mining `k` during the wait.
    fn deficit(&self, k: u64) -> u64 {
        match self.variant {
            Variant::Original => self.z - k,
            Variant::Corrected | Variant::Budgeted => self.z + 1 - k,
        }
    }

    fn last_k(&self) -> u64 {
        match self.variant {
            Variant::Original => self.z,
            Variant::Corrected | Variant::Budgeted => self.z + 1,
        }
    }
}

/// One `k` term of the attack-success sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AttackTerm {
    /// Attacker blocks mined during the wait.
    pub k: u64,
    /// Poisson weight `P(X = k; λ)`.
    pub pmf: f64,
    /// Probability of eventually overtaking from the remaining deficit.
    pub catch_up: f64,
    /// `pmf * catch_up`, this term's contribution to the success probability.
    pub product: f64,
}

/// The success probability together with the terms it was summed from.
#[derive(Debug, Clone, PartialEq)]
pub struct AttackBreakdown {
    pub query: AttackQuery,
    pub rate: PoissonRate,
    pub terms: Vec<AttackTerm>,
    pub probability: Probability,
}

/// Probability that the attack eventually succeeds.
pub fn attack_success(query: &AttackQuery) -> Probability {
    attack_breakdown(query).probability
}

/// Evaluates `1 - Σ_k pmf(k; λ) (1 - catch_up(k))` over `k = 0..=z` (original)
/// or `k = 0..=z+1` (corrected, budgeted), keeping every term.
///
/// Results below one half are computed from the equivalent success-side sum
/// `Σ_k pmf(k; λ) catch_up(k) + P(X > last k)`, which keeps full relative
/// precision for very small probabilities.
pub fn attack_breakdown(query: &AttackQuery) -> AttackBreakdown {
    let rate = poisson_rate(query.z, query.power);
    let weights = poisson_pmf_table(rate, query.last_k());
    let terms: Vec<AttackTerm> = weights
        .iter()
        .zip(0..)
        .map(|(&pmf, k)| {
            let catch_up = catch_up_factor(query, k).value();
            AttackTerm {
                k,
                pmf,
                catch_up,
                product: pmf * catch_up,
            }
        })
        .collect();
    let failure: f64 = terms.iter().map(|t| t.pmf * (1.0 - t.catch_up)).sum();
    let raw = if failure <= 0.5 {
        1.0 - failure
    } else {
        // Small success probabilities lose all precision in `1 - failure`.
        // Sum the success side instead: every term plus the Poisson tail
        // beyond the last summed k, where the attacker is already ahead.
        let head: f64 = terms.iter().map(|t| t.product).sum();
        head + poisson_upper_tail(rate, query.last_k())
    };
    AttackBreakdown {
        query: *query,
        rate,
        probability: Probability::from_computed(raw),
        terms,
    }
}

/// The attack-success sum with the Poisson weights replaced by `weight(k)`,
/// e.g. an empirical distribution of `k`. Mass beyond the last summed `k`
/// counts as attacker success, as it does in the Poisson form.
pub fn reweighted_attack_success(query: &AttackQuery, weight: impl Fn(u64) -> f64) -> f64 {
    let failure: f64 = (0..=query.last_k())
        .map(|k| weight(k) * (1.0 - catch_up_factor(query, k).value()))
        .sum();
    1.0 - failure
}

fn catch_up_factor(query: &AttackQuery, k: u64) -> Probability {
    let deficit = query.deficit(k);
    match query.variant {
        Variant::Original | Variant::Corrected => catch_up_unlimited(deficit, query.power),
        Variant::Budgeted => {
            if deficit == 0 {
                // already strictly ahead; the budget is irrelevant
                return Probability::ONE;
            }
            let budget = query.z + query.budget_surplus - k;
            catch_up_limited(deficit, budget, query.power)
                .expect("budget is at least the surplus whenever the deficit is positive")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::E;

    fn split(q: f64) -> MiningPowerSplit {
        MiningPowerSplit::new(q).unwrap()
    }

    #[test]
    fn worked_example_summand() {
        let b = attack_breakdown(&AttackQuery::original(split(0.25), 3));
        let t = b.terms[2];
        assert_eq!(t.k, 2);
        assert!((t.pmf - 1.0 / (2.0 * E)).abs() < 1e-12);
        assert!((t.catch_up - 1.0 / 3.0).abs() < 1e-12);
        assert!((t.product - 1.0 / (6.0 * E)).abs() < 1e-12);
        assert_eq!(b.terms.len(), 4);
    }

    #[test]
    fn zero_depth() {
        let orig = attack_success(&AttackQuery::original(split(0.3), 0));
        assert_eq!(orig.value(), 1.0);
        let corr = attack_success(&AttackQuery::corrected(split(0.3), 0));
        assert!((corr.value() - 3.0 / 7.0).abs() < 1e-15);
    }

    #[test]
    fn majority_attacker_always_wins() {
        for z in [0, 1, 5, 40] {
            for q in [0.5, 0.6, 0.9] {
                assert_eq!(
                    attack_success(&AttackQuery::original(split(q), z)).value(),
                    1.0
                );
                assert_eq!(
                    attack_success(&AttackQuery::corrected(split(q), z)).value(),
                    1.0
                );
            }
        }
    }

    #[test]
    fn budgeted_with_unit_surplus_is_defined() {
        let q = AttackQuery::budgeted(split(0.3), 4, 1).unwrap();
        let b = attack_breakdown(&q);
        assert_eq!(b.terms.last().unwrap().catch_up, 1.0);
        assert!(b.probability.value() > 0.0);
    }

    #[test]
    fn rejects_zero_surplus() {
        assert_eq!(
            AttackQuery::budgeted(split(0.3), 4, 0),
            Err(Error::ZeroBudgetSurplus)
        );
        assert!(AttackQuery::new(split(0.3), 4, Variant::Corrected, 0).is_ok());
    }

    #[test]
    fn deep_confirmations_are_stable() {
        let p = attack_success(&AttackQuery::corrected(split(0.05), 100)).value();
        assert!(p > 0.0 && p < 1e-80, "{p}");
        let p = attack_success(&AttackQuery::budgeted(split(0.45), 2_000, 35).unwrap()).value();
        assert!((0.0..=1.0).contains(&p));
    }

    #[test]
    fn reweighting_with_poisson_reproduces_the_model() {
        for variant in Variant::ALL {
            let q = AttackQuery::new(split(0.27), 7, variant, 35).unwrap();
            let rate = poisson_rate(7, split(0.27));
            let w = reweighted_attack_success(&q, |k| {
                super::super::poisson::poisson_pmf(k, rate).value()
            });
            assert!((w - attack_success(&q).value()).abs() < 1e-14, "{variant}");
        }
    }

    #[test]
    fn variant_names_round_trip() {
        for v in Variant::ALL {
            assert_eq!(v.name().parse::<Variant>().unwrap(), v);
        }
        assert!("satoshi".parse::<Variant>().is_err());
    }
}
