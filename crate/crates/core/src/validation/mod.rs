//! Model-versus-simulation sweeps and per-component error attribution.

mod attribution;
mod grid;
#[cfg(test)]
mod negbin;
mod sweep;

pub use attribution::{
    component_attribution, AttributionReport, CatchUpCheck, Component, HybridCheck, KMassCheck,
    RateCheck, TotalVariation, OUTLIER_Z_SCORE,
};
pub use grid::SweepGrid;
pub use sweep::{cell_seed, run_validation, ValidationRow};
