use crate::analytic::{MiningPowerSplit, Variant};
use crate::error::{Error, Result};

/// Axes and settings of a model-versus-simulation sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid {
    q_values: Vec<f64>,
    z_values: Vec<u64>,
    variant: Variant,
    budget_surplus: u64,
    trials: u64,
    master_seed: u64,
}

impl SweepGrid {
    /// Both axes must be non-empty and strictly ascending.
    pub fn new(
        q_values: Vec<f64>,
        z_values: Vec<u64>,
        variant: Variant,
        budget_surplus: u64,
        trials: u64,
        master_seed: u64,
    ) -> Result<Self> {
        if q_values.is_empty() || z_values.is_empty() {
            return Err(Error::InvalidGrid("q and z axes must be non-empty".into()));
        }
        for &q in &q_values {
            MiningPowerSplit::new(q)?;
        }
        if !q_values.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidGrid(
                "q values must be strictly ascending".into(),
            ));
        }
        if !z_values.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidGrid(
                "z values must be strictly ascending".into(),
            ));
        }
        if budget_surplus == 0 {
            return Err(Error::ZeroBudgetSurplus);
        }
        if trials == 0 {
            return Err(Error::ZeroTrials);
        }
        Ok(Self {
            q_values,
            z_values,
            variant,
            budget_surplus,
            trials,
            master_seed,
        })
    }

    pub fn q_values(&self) -> &[f64] {
        &self.q_values
    }

    pub fn z_values(&self) -> &[u64] {
        &self.z_values
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn budget_surplus(&self) -> u64 {
        self.budget_surplus
    }

    pub fn trials(&self) -> u64 {
        self.trials
    }

    pub fn master_seed(&self) -> u64 {
        self.master_seed
    }
}
