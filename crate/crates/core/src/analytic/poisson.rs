//! Poisson approximation of attacker progress during the merchant's wait.

use statrs::function::factorial::ln_factorial;
use statrs::function::gamma::gamma_lr;

use super::power::MiningPowerSplit;
use super::probability::Probability;
use crate::error::{Error, Result};

/// Below `exp(-SEED_LAMBDA_LIMIT)` the recurrence seed would be subnormal.
const SEED_LAMBDA_LIMIT: f64 = 700.0;

/// Expected attacker blocks mined while honest miners produce `z` blocks.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct PoissonRate(f64);

impl PoissonRate {
    pub fn new(lambda: f64) -> Result<Self> {
        if lambda.is_finite() && lambda >= 0.0 {
            Ok(Self(lambda))
        } else {
            Err(Error::InvalidRate(lambda))
        }
    }

    #[inline]
    pub fn lambda(self) -> f64 {
        self.0
    }
}

/// `λ = z q / p`.
pub fn poisson_rate(z: u64, power: MiningPowerSplit) -> PoissonRate {
    PoissonRate(z as f64 * power.attacker() / power.honest())
}

/// `λ^k e^{-λ} / k!`, evaluated in log space.
pub fn poisson_pmf(k: u64, rate: PoissonRate) -> Probability {
    let lambda = rate.lambda();
    if lambda == 0.0 {
        return if k == 0 {
            Probability::ONE
        } else {
            Probability::ZERO
        };
    }
    let ln_pmf = k as f64 * lambda.ln() - lambda - ln_factorial(k);
    Probability::from_computed(ln_pmf.exp())
}

/// `P(X > n)`, the regularized lower incomplete gamma `P(n + 1, λ)`.
pub(crate) fn poisson_upper_tail(rate: PoissonRate, n: u64) -> f64 {
    let lambda = rate.lambda();
    if lambda == 0.0 {
        return 0.0;
    }
    gamma_lr(n as f64 + 1.0, lambda)
}

/// `P(X = k)` for `k = 0..=max_k`.
///
/// Uses the recurrence `P(k) = P(k-1) λ / k` seeded with `e^{-λ}` while that
/// seed is representable and falls back to per-term log space otherwise.
pub(crate) fn poisson_pmf_table(rate: PoissonRate, max_k: u64) -> Vec<f64> {
    let lambda = rate.lambda();
    if lambda > SEED_LAMBDA_LIMIT {
        return (0..=max_k).map(|k| poisson_pmf(k, rate).value()).collect();
    }
    let mut out = Vec::with_capacity(max_k as usize + 1);
    let mut term = (-lambda).exp();
    out.push(term);
    for k in 1..=max_k {
        term *= lambda / k as f64;
        out.push(term);
    }
    out
}
