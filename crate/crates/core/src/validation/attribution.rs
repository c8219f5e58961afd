//! Splits model-versus-simulation error into the model's three ingredients:
//! the budgeted catch-up probability, the rate `λ = zq/p`, and the Poisson
//! weights themselves.

use super::sweep::cell_seed;
use crate::analytic::{
    attack_success, catch_up_limited, poisson_pmf, poisson_rate, reweighted_attack_success,
    AttackQuery, MiningPowerSplit,
};
use crate::error::{Error, Result};
use crate::sim::{
    binomial_std_err, derive_seed, empirical_catch_up, empirical_k_distribution, run_trials,
    KDistribution, Proportion, TrialConfig,
};

/// Components whose worst standardized deviation exceeds this are flagged.
pub const OUTLIER_Z_SCORE: f64 = 3.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    CatchUp,
    Rate,
    PoissonPmf,
}

impl Component {
    pub fn name(self) -> &'static str {
        match self {
            Component::CatchUp => "catch_up",
            Component::Rate => "lambda",
            Component::PoissonPmf => "poisson_pmf",
        }
    }
}

/// Budgeted catch-up from the deficit left after `k` wait-phase blocks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CatchUpCheck {
    pub k: u64,
    pub deficit: u64,
    pub budget: u64,
    pub model: f64,
    pub empirical: Proportion,
}

impl CatchUpCheck {
    /// Binomial standard error at the model value.
    pub fn std_err(&self) -> f64 {
        binomial_std_err(self.model, self.empirical.trials)
    }

    pub fn z_score(&self) -> f64 {
        standardize(self.empirical.rate() - self.model, self.std_err())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateCheck {
    pub lambda: f64,
    pub empirical_mean: f64,
    pub std_err: f64,
}

impl RateCheck {
    pub fn z_score(&self) -> f64 {
        standardize(self.empirical_mean - self.lambda, self.std_err)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KMassCheck {
    pub k: u64,
    pub empirical: f64,
    pub poisson: f64,
    pub std_err: f64,
}

/// Total-variation distance between the empirical `k` law and the Poisson pmf.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TotalVariation {
    pub distance: f64,
    /// Delta-method standard error of `distance`.
    pub std_err: f64,
}

impl TotalVariation {
    pub fn z_score(&self) -> f64 {
        standardize(self.distance, self.std_err)
    }
}

/// The budgeted model with Poisson weights versus empirical-`k` weights, both
/// against the full race simulation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HybridCheck {
    pub poisson_model: f64,
    pub hybrid_model: f64,
    pub simulated: f64,
    pub sim_std_err: f64,
    pub trials: u64,
}

impl HybridCheck {
    pub fn poisson_z_score(&self) -> f64 {
        standardize(self.poisson_model - self.simulated, self.sim_std_err)
    }

    pub fn hybrid_z_score(&self) -> f64 {
        standardize(self.hybrid_model - self.simulated, self.sim_std_err)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AttributionReport {
    pub q: f64,
    pub z: u64,
    pub budget_surplus: u64,
    pub trials: u64,
    pub catch_up: Vec<CatchUpCheck>,
    pub rate: RateCheck,
    pub k_masses: Vec<KMassCheck>,
    pub total_variation: TotalVariation,
    pub hybrid: HybridCheck,
}

impl AttributionReport {
    /// Worst absolute z-score per component.
    pub fn component_scores(&self) -> [(Component, f64); 3] {
        let catch_up = self
            .catch_up
            .iter()
            .map(|c| c.z_score().abs())
            .fold(0.0, f64::max);
        [
            (Component::CatchUp, catch_up),
            (Component::Rate, self.rate.z_score().abs()),
            (Component::PoissonPmf, self.total_variation.z_score()),
        ]
    }

    pub fn flagged_components(&self) -> Vec<Component> {
        self.component_scores()
            .into_iter()
            .filter(|&(_, s)| s > OUTLIER_Z_SCORE)
            .map(|(c, _)| c)
            .collect()
    }
}

fn standardize(diff: f64, std_err: f64) -> f64 {
    if diff == 0.0 {
        0.0
    } else {
        diff / std_err
    }
}

/// Runs the three component comparisons and the hybrid model at one `(q, z)`.
///
/// Each comparison uses `trials` fresh trials on seeds derived from
/// `master_seed`. The hybrid model is weighted by the `k` histogram of the same
/// race simulation it is compared to.
pub fn component_attribution(
    power: MiningPowerSplit,
    z: u64,
    budget_surplus: u64,
    trials: u64,
    master_seed: u64,
) -> Result<AttributionReport> {
    if z == 0 {
        return Err(Error::ZeroDepth);
    }
    let query = AttackQuery::budgeted(power, z, budget_surplus)?;

    let catch_up = (0..=z)
        .map(|k| {
            let deficit = z + 1 - k;
            let budget = z + budget_surplus - k;
            let seed = derive_seed(master_seed, k);
            Ok(CatchUpCheck {
                k,
                deficit,
                budget,
                model: catch_up_limited(deficit, budget, power)?.value(),
                empirical: empirical_catch_up(power, deficit, budget, trials, seed)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let rate = poisson_rate(z, power);
    let k_dist = empirical_k_distribution(power, z, trials, cell_seed(master_seed, 1, 0))?;
    let rate_check = RateCheck {
        lambda: rate.lambda(),
        empirical_mean: k_dist.mean(),
        std_err: k_dist.mean_std_err(),
    };
    let k_masses = (0..=k_dist.max_k())
        .map(|k| {
            let e = k_dist.probability(k);
            KMassCheck {
                k,
                empirical: e,
                poisson: poisson_pmf(k, rate).value(),
                std_err: binomial_std_err(e, trials),
            }
        })
        .collect();
    let total_variation = total_variation_from_poisson(&k_dist, |k| poisson_pmf(k, rate).value());

    let config = TrialConfig::new(power, z, budget_surplus)?;
    let race = run_trials(&config, trials, cell_seed(master_seed, 2, 0))?;
    let race_k = race.k_distribution();
    let hybrid = HybridCheck {
        poisson_model: attack_success(&query).value(),
        hybrid_model: reweighted_attack_success(&query, |k| race_k.probability(k)),
        simulated: race.success_rate(),
        sim_std_err: race.std_err(),
        trials,
    };

    Ok(AttributionReport {
        q: power.attacker(),
        z,
        budget_surplus,
        trials,
        catch_up,
        rate: rate_check,
        k_masses,
        total_variation,
        hybrid,
    })
}

/// `½ Σ_k |ê_k − π_k|` over all `k ≥ 0`, the reference mass beyond the largest
/// observed `k` included.
pub(crate) fn total_variation_from_poisson(
    dist: &KDistribution,
    reference: impl Fn(u64) -> f64,
) -> TotalVariation {
    let n = dist.trials as f64;
    let mut abs_sum = 0.0;
    let mut covered = 0.0;
    // moments of the signed indicator Σ s_k 1{k}
    let mut s_mean = 0.0;
    let mut s_sq_mean = 0.0;
    for k in 0..=dist.max_k() {
        let e = dist.probability(k);
        let r = reference(k);
        covered += r;
        abs_sum += (e - r).abs();
        let sign = if e > r {
            1.0
        } else if e < r {
            -1.0
        } else {
            0.0
        };
        s_mean += sign * e;
        s_sq_mean += sign * sign * e;
    }
    let tail = (1.0 - covered).max(0.0);
    let var = ((s_sq_mean - s_mean * s_mean) / n).max(0.0);
    TotalVariation {
        distance: 0.5 * (abs_sum + tail),
        std_err: 0.5 * var.sqrt(),
    }
}

#[cfg(test)]
mod tests {
    use super::super::negbin::negative_binomial_pmf;
    use super::*;
    use std::collections::BTreeMap;

    fn split(q: f64) -> MiningPowerSplit {
        MiningPowerSplit::new(q).unwrap()
    }

    #[test]
    fn total_variation_of_identical_laws_is_zero() {
        let dist = KDistribution {
            z: 1,
            trials: 4,
            counts: BTreeMap::from([(0, 2), (1, 2)]),
        };
        let tv = total_variation_from_poisson(&dist, |k| if k < 2 { 0.5 } else { 0.0 });
        assert_eq!(tv.distance, 0.0);
        let shifted = total_variation_from_poisson(&dist, |k| if k == 2 { 1.0 } else { 0.0 });
        assert!((shifted.distance - 1.0).abs() < 1e-15);
    }

    #[test]
    fn attribution_blames_the_poisson_weights() {
        let power = split(0.25);
        let report = component_attribution(power, 3, 35, 200_000, 17).unwrap();

        assert_eq!(report.catch_up.len(), 4);
        for c in &report.catch_up {
            assert!(c.z_score().abs() < 4.0, "{c:?}");
        }
        assert!(report.rate.z_score().abs() < 4.0);
        assert!(report.total_variation.z_score() > 5.0);
        assert_eq!(report.flagged_components(), vec![Component::PoissonPmf]);

        // the empirical law tracks the exact negative binomial instead
        let mut k_dist = KDistribution {
            z: 3,
            trials: report.trials,
            counts: BTreeMap::new(),
        };
        for m in &report.k_masses {
            let c = (m.empirical * report.trials as f64).round() as u64;
            if c > 0 {
                k_dist.counts.insert(m.k, c);
            }
        }
        let nb = total_variation_from_poisson(&k_dist, |k| negative_binomial_pmf(k, 3, power));
        assert!(nb.distance < report.total_variation.distance / 5.0);

        let h = report.hybrid;
        assert!(h.hybrid_z_score().abs() < 3.0, "{h:?}");
        assert!(h.poisson_z_score().abs() > 3.0, "{h:?}");
    }

    #[test]
    fn rejects_zero_depth() {
        assert_eq!(
            component_attribution(split(0.25), 0, 35, 100, 1),
            Err(Error::ZeroDepth)
        );
    }
}
