use rayon::prelude::*;

use super::grid::SweepGrid;
use crate::analytic::{attack_success, AttackQuery, MiningPowerSplit};
use crate::error::Result;
use crate::sim::{derive_seed, run_trials, TrialConfig};

/// Model versus simulation at one `(q, z)` cell.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationRow {
    pub q: f64,
    pub z: u64,
    pub model_prob: f64,
    pub sim_prob: f64,
    pub sim_std_err: f64,
    /// `|model_prob - sim_prob|`
    pub abs_error: f64,
    /// `abs_error / sim_prob`; `None` when the simulation saw no wins.
    pub rel_error: Option<f64>,
    pub trials: u64,
    pub capped: u64,
}

impl ValidationRow {
    pub fn new(
        q: f64,
        z: u64,
        model_prob: f64,
        sim_prob: f64,
        sim_std_err: f64,
        trials: u64,
    ) -> Self {
        let abs_error = (model_prob - sim_prob).abs();
        Self {
            q,
            z,
            model_prob,
            sim_prob,
            sim_std_err,
            abs_error,
            rel_error: (sim_prob > 0.0).then(|| abs_error / sim_prob),
            trials,
            capped: 0,
        }
    }

    /// `(model - sim) / sim_std_err`; infinite if the simulation has no spread
    /// but disagrees with the model.
    pub fn z_score(&self) -> f64 {
        let diff = self.model_prob - self.sim_prob;
        if diff == 0.0 {
            0.0
        } else {
            diff / self.sim_std_err
        }
    }
}

/// Seed for cell `(q_index, z_index)`. Independent of the grid's extent, so
/// extending an axis leaves existing cells untouched.
pub fn cell_seed(master_seed: u64, q_index: usize, z_index: usize) -> u64 {
    derive_seed(derive_seed(master_seed, q_index as u64), z_index as u64)
}

/// Evaluates every cell of `grid`, rows ordered by `q` then `z`.
pub fn run_validation(grid: &SweepGrid) -> Result<Vec<ValidationRow>> {
    let cells: Vec<(usize, usize)> = (0..grid.q_values().len())
        .flat_map(|qi| (0..grid.z_values().len()).map(move |zi| (qi, zi)))
        .collect();
    cells
        .into_par_iter()
        .map(|(qi, zi)| {
            let q = grid.q_values()[qi];
            let z = grid.z_values()[zi];
            let power = MiningPowerSplit::new(q)?;
            let query = AttackQuery::new(power, z, grid.variant(), grid.budget_surplus())?;
            let model = attack_success(&query).value();
            let config = TrialConfig::new(power, z, grid.budget_surplus())?;
            let sim = run_trials(
                &config,
                grid.trials(),
                cell_seed(grid.master_seed(), qi, zi),
            )?;
            let mut row =
                ValidationRow::new(q, z, model, sim.success_rate(), sim.std_err(), sim.trials);
            row.capped = sim.capped_count;
            Ok(row)
        })
        .collect()
}
