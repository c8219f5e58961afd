//! Parallel trial batches and the component estimators built on them.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::stream::{StreamDomain, Substreams};
use super::trial::{
    chase, coin, simulate_trial, wait_phase, Chase, TrialConfig, DEFAULT_MAX_BLOCKS,
};
use crate::analytic::{MiningPowerSplit, Probability};
use crate::error::{Error, Result};

/// Aggregate of a batch of races.
#[derive(Debug, Clone, PartialEq)]
pub struct SimulationResult {
    pub config: TrialConfig,
    pub trials: u64,
    pub wins: u64,
    /// Number of trials by attacker blocks mined during the wait.
    pub k_histogram: BTreeMap<u64, u64>,
    pub master_seed: u64,
    pub capped_count: u64,
}

impl SimulationResult {
    pub fn success_rate(&self) -> f64 {
        self.wins as f64 / self.trials as f64
    }

    /// Binomial standard error of [`success_rate`](Self::success_rate).
    pub fn std_err(&self) -> f64 {
        binomial_std_err(self.success_rate(), self.trials)
    }

    pub fn k_distribution(&self) -> KDistribution {
        KDistribution {
            z: self.config.z(),
            trials: self.trials,
            counts: self.k_histogram.clone(),
        }
    }
}

/// `sqrt(m (1 - m) / n)`.
pub fn binomial_std_err(rate: f64, trials: u64) -> f64 {
    (rate * (1.0 - rate) / trials as f64).sqrt()
}

/// Successes out of a number of independent trials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Proportion {
    pub successes: u64,
    pub trials: u64,
    /// Trials stopped by the block cap, counted as failures.
    pub capped: u64,
}

impl Proportion {
    pub fn rate(&self) -> f64 {
        self.successes as f64 / self.trials as f64
    }

    pub fn probability(&self) -> Probability {
        Probability::from_computed(self.rate())
    }

    pub fn std_err(&self) -> f64 {
        binomial_std_err(self.rate(), self.trials)
    }
}

/// Empirical law of `k`, the attacker blocks mined during the wait.
#[derive(Debug, Clone, PartialEq)]
pub struct KDistribution {
    pub z: u64,
    pub trials: u64,
    pub counts: BTreeMap<u64, u64>,
}

impl KDistribution {
    pub fn probability(&self, k: u64) -> f64 {
        self.counts.get(&k).copied().unwrap_or(0) as f64 / self.trials as f64
    }

    pub fn probabilities(&self) -> BTreeMap<u64, f64> {
        self.counts
            .iter()
            .map(|(&k, &c)| (k, c as f64 / self.trials as f64))
            .collect()
    }

    pub fn max_k(&self) -> u64 {
        self.counts.keys().next_back().copied().unwrap_or(0)
    }

    pub fn mean(&self) -> f64 {
        let sum: u128 = self
            .counts
            .iter()
            .map(|(&k, &c)| k as u128 * c as u128)
            .sum();
        sum as f64 / self.trials as f64
    }

    /// Unbiased sample variance.
    pub fn variance(&self) -> f64 {
        if self.trials < 2 {
            return 0.0;
        }
        let mean = self.mean();
        let ss: f64 = self
            .counts
            .iter()
            .map(|(&k, &c)| c as f64 * (k as f64 - mean).powi(2))
            .sum();
        ss / (self.trials - 1) as f64
    }

    pub fn mean_std_err(&self) -> f64 {
        (self.variance() / self.trials as f64).sqrt()
    }
}

#[derive(Debug, Default)]
struct Tally {
    wins: u64,
    capped: u64,
    by_k: Vec<u64>,
}

impl Tally {
    fn record_k(&mut self, k: u64) {
        let k = k as usize;
        if self.by_k.len() <= k {
            self.by_k.resize(k + 1, 0);
        }
        self.by_k[k] += 1;
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.wins += other.wins;
        self.capped += other.capped;
        if self.by_k.len() < other.by_k.len() {
            self.by_k.resize(other.by_k.len(), 0);
        }
        for (a, b) in self.by_k.iter_mut().zip(other.by_k) {
            *a += b;
        }
        self
    }

    fn histogram(&self) -> BTreeMap<u64, u64> {
        self.by_k
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(k, &c)| (k as u64, c))
            .collect()
    }
}

/// Runs `trials` independent races. Trial `t` draws from substream `t` of
/// `master_seed`, so the result is identical for any thread count.
pub fn run_trials(config: &TrialConfig, trials: u64, master_seed: u64) -> Result<SimulationResult> {
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    let streams = Substreams::new(master_seed, StreamDomain::Race);
    let tally = (0..trials)
        .into_par_iter()
        .fold(Tally::default, |mut tally, t| {
            let record = simulate_trial(&mut streams.stream(t), config);
            tally.wins += record.attacker_won as u64;
            tally.capped += record.capped as u64;
            tally.record_k(record.k_during_wait);
            tally
        })
        .reduce(Tally::default, Tally::merge);
    Ok(SimulationResult {
        config: *config,
        trials,
        wins: tally.wins,
        k_histogram: tally.histogram(),
        master_seed,
        capped_count: tally.capped,
    })
}

/// Estimates the budgeted catch-up probability by running only the chase:
/// start `deficit` behind, win at 0, give up at `deficit + budget`.
pub fn empirical_catch_up(
    power: MiningPowerSplit,
    deficit: u64,
    budget: u64,
    trials: u64,
    master_seed: u64,
) -> Result<Proportion> {
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    if budget == 0 {
        return Err(Error::ZeroBudget);
    }
    if deficit == 0 {
        return Ok(Proportion {
            successes: trials,
            trials,
            capped: 0,
        });
    }
    let streams = Substreams::new(master_seed, StreamDomain::CatchUp);
    let coin = coin(power);
    let (successes, capped) = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut blocks = 0;
            match chase(
                &mut streams.stream(t),
                &coin,
                deficit,
                budget,
                &mut blocks,
                DEFAULT_MAX_BLOCKS,
            ) {
                Chase::Won => (1, 0),
                Chase::Lost => (0, 0),
                Chase::Capped => (0, 1),
            }
        })
        .reduce(|| (0u64, 0u64), |a, b| (a.0 + b.0, a.1 + b.1));
    Ok(Proportion {
        successes,
        trials,
        capped,
    })
}

/// Simulates only the wait for `z` honest blocks and tabulates how many
/// blocks the attacker mined meanwhile.
pub fn empirical_k_distribution(
    power: MiningPowerSplit,
    z: u64,
    trials: u64,
    master_seed: u64,
) -> Result<KDistribution> {
    if z == 0 {
        return Err(Error::ZeroDepth);
    }
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    let streams = Substreams::new(master_seed, StreamDomain::Wait);
    let coin = coin(power);
    let tally = (0..trials)
        .into_par_iter()
        .fold(Tally::default, |mut tally, t| {
            let mut blocks = 0;
            // the wait ends almost surely; u64::MAX leaves it uncapped
            let wait = wait_phase(&mut streams.stream(t), &coin, z, &mut blocks, u64::MAX);
            tally.record_k(wait.k);
            tally
        })
        .reduce(Tally::default, Tally::merge);
    Ok(KDistribution {
        z,
        trials,
        counts: tally.histogram(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn split(q: f64) -> MiningPowerSplit {
        MiningPowerSplit::new(q).unwrap()
    }

    #[test]
    fn histogram_accounts_for_every_trial() {
        let cfg = TrialConfig::with_default_budget(split(0.3), 4);
        let r = run_trials(&cfg, 5_000, 11).unwrap();
        assert_eq!(r.k_histogram.values().sum::<u64>(), 5_000);
        assert!(r.wins <= r.trials);
        assert_eq!(r.capped_count, 0);
    }

    #[test]
    fn same_seed_same_result_across_pool_sizes() {
        let cfg = TrialConfig::with_default_budget(split(0.35), 3);
        let base = run_trials(&cfg, 20_000, 99).unwrap();
        for threads in [1, 3, 8] {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap();
            let again = pool.install(|| run_trials(&cfg, 20_000, 99).unwrap());
            assert_eq!(base, again, "threads={threads}");
        }
        let other = run_trials(&cfg, 20_000, 100).unwrap();
        assert_ne!(base.wins, other.wins);
    }

    #[test]
    fn catch_up_from_zero_deficit_is_certain() {
        let p = empirical_catch_up(split(0.2), 0, 10, 100, 1).unwrap();
        assert_eq!(p.rate(), 1.0);
    }

    #[test]
    fn estimators_reject_bad_input() {
        let cfg = TrialConfig::with_default_budget(split(0.3), 2);
        assert_eq!(run_trials(&cfg, 0, 1), Err(Error::ZeroTrials));
        assert_eq!(
            empirical_catch_up(split(0.3), 2, 0, 10, 1),
            Err(Error::ZeroBudget)
        );
        assert_eq!(
            empirical_k_distribution(split(0.3), 0, 10, 1),
            Err(Error::ZeroDepth)
        );
    }

    #[test]
    fn negligible_attacker_mines_nothing() {
        let d = empirical_k_distribution(split(1e-6), 3, 10_000, 5).unwrap();
        assert!(d.probability(0) > 0.99);
        let cfg = TrialConfig::with_default_budget(split(0.001), 3);
        let r = run_trials(&cfg, 10_000, 5).unwrap();
        assert!(r.success_rate() < 0.01);
    }

    #[test]
    fn k_moments() {
        let d = KDistribution {
            z: 1,
            trials: 4,
            counts: BTreeMap::from([(0, 2), (2, 2)]),
        };
        assert_eq!(d.mean(), 1.0);
        assert!((d.variance() - 4.0 / 3.0).abs() < 1e-15);
        assert_eq!(d.max_k(), 2);
        assert_eq!(d.probabilities()[&2], 0.5);
    }
}
