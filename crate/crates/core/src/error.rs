use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("attacker mining power must lie strictly between 0 and 1, got {0}")]
    InvalidPower(f64),

    #[error("probability must lie in [0, 1], got {0}")]
    InvalidProbability(f64),

    #[error("target probability must lie strictly between 0 and 1, got {0}")]
    InvalidTarget(f64),

    #[error("Poisson rate must be finite and non-negative, got {0}")]
    InvalidRate(f64),

    #[error(
        "ruin game requires target >= 1 and fortune <= target (fortune {fortune}, target {target})"
    )]
    InvalidRuinGame { fortune: u64, target: u64 },

    #[error("attacker budget must be at least 1")]
    ZeroBudget,

    #[error("budget surplus must be at least 1")]
    ZeroBudgetSurplus,

    #[error("trial count must be at least 1")]
    ZeroTrials,

    #[error("per-trial block cap must be at least 1")]
    ZeroMaxBlocks,

    #[error("confirmation depth must be at least 1 here")]
    ZeroDepth,

    #[error("invalid sweep grid: {0}")]
    InvalidGrid(String),
}
