//! Exact law of the attacker's wait-phase blocks under per-block coin flips:
//! the number of attacker blocks before the `z`-th honest block is negative
//! binomial. Kept as a test oracle only.

use statrs::function::factorial::ln_binomial;

use crate::analytic::MiningPowerSplit;

/// `C(k + z - 1, k) p^z q^k`.
pub(crate) fn negative_binomial_pmf(k: u64, z: u64, power: MiningPowerSplit) -> f64 {
    if z == 0 {
        return if k == 0 { 1.0 } else { 0.0 };
    }
    let ln = ln_binomial(k + z - 1, k)
        + z as f64 * power.honest().ln()
        + k as f64 * power.attacker().ln();
    ln.exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_case() {
        let power = MiningPowerSplit::new(0.25).unwrap();
        for k in 0..10 {
            let expected = 0.75 * 0.25f64.powi(k as i32);
            assert!((negative_binomial_pmf(k, 1, power) - expected).abs() < 1e-14);
        }
        assert!((negative_binomial_pmf(0, 3, power) - 0.421875).abs() < 1e-14);
    }

    #[test]
    fn normalizes_with_mean_zq_over_p() {
        let power = MiningPowerSplit::new(0.3).unwrap();
        let masses: Vec<f64> = (0..400)
            .map(|k| negative_binomial_pmf(k, 6, power))
            .collect();
        let total: f64 = masses.iter().sum();
        let mean: f64 = masses.iter().enumerate().map(|(k, m)| k as f64 * m).sum();
        assert!((total - 1.0).abs() < 1e-12);
        assert!((mean - 6.0 * 0.3 / 0.7).abs() < 1e-10);
    }
}
