#![allow(dead_code)]

use doublespend::MiningPowerSplit;

pub fn split(q: f64) -> MiningPowerSplit {
    MiningPowerSplit::new(q).unwrap()
}

/// Exact law of attacker blocks mined before the `z`-th honest block:
/// `C(k+z-1, k) p^z q^k`, by a running product.
pub fn negative_binomial(k: u64, z: u64, q: f64) -> f64 {
    let p = 1.0 - q;
    let mut coeff = 1.0;
    for j in 1..=k {
        coeff *= (z + j - 1) as f64 / j as f64;
    }
    coeff * p.powi(z as i32) * q.powi(k as i32)
}

/// `P(win)` of the budgeted race by first-step recursion over the exact
/// negative-binomial wait and a dense ruin solve per deficit. Shares no code
/// with the library.
pub fn exact_race_win(q: f64, z: u64, surplus: u64) -> f64 {
    let mut lose = 0.0;
    for k in 0..=z {
        let deficit = z + 1 - k;
        let budget = z + surplus - k;
        let win = ruin_by_iteration(q, budget as usize, (budget + deficit) as usize);
        lose += negative_binomial(k, z, q) * (1.0 - win);
    }
    1.0 - lose
}

/// Win probability of the ruin game from `start` with target `n`, by
/// Gauss-Seidel sweeps of `x_i = q x_{i+1} + p x_{i-1}` to convergence.
pub fn ruin_by_iteration(q: f64, start: usize, n: usize) -> f64 {
    let p = 1.0 - q;
    let mut x = vec![0.0; n + 1];
    x[n] = 1.0;
    for _ in 0..200_000 {
        let mut delta: f64 = 0.0;
        for i in 1..n {
            let v = q * x[i + 1] + p * x[i - 1];
            delta = delta.max((v - x[i]).abs());
            x[i] = v;
        }
        if delta < 1e-15 {
            break;
        }
    }
    x[start]
}

/// Checks a simulated rate against the Poisson model. Where the Poisson
/// approximation error dominates, the deviation must point the same way as
/// the exact expectation does and the rate must agree with that expectation.
pub fn consistent_with_model(sim: f64, trials: u64, model: f64, exact: f64) -> Result<(), String> {
    let se_model = (model * (1.0 - model) / trials as f64).sqrt();
    if (sim - model).abs() <= 3.0 * se_model {
        return Ok(());
    }
    let se_exact = (exact * (1.0 - exact) / trials as f64).sqrt();
    let same_direction = (sim - model).signum() == (exact - model).signum();
    if same_direction && (sim - exact).abs() <= 3.0 * se_exact {
        Ok(())
    } else {
        Err(format!(
            "sim {sim} vs model {model} (se {se_model}), exact {exact} (se {se_exact})"
        ))
    }
}
