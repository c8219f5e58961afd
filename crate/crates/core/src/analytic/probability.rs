use std::fmt;

use crate::error::{Error, Result};

/// Computed values may stray this far outside `[0, 1]` through round-off and
/// are clamped. Anything further out is a bug in the computation.
pub const GUARD_BAND: f64 = 1e-9;

/// A value in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Probability(f64);

impl Probability {
    pub const ZERO: Probability = Probability(0.0);
    pub const ONE: Probability = Probability(1.0);

    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(Self(value))
        } else {
            Err(Error::InvalidProbability(value))
        }
    }

    /// Wraps the raw result of a probability computation.
    ///
    /// # Panics
    ///
    /// If `raw` is NaN or lies outside `[-GUARD_BAND, 1 + GUARD_BAND]`.
    pub(crate) fn from_computed(raw: f64) -> Self {
        assert!(
            (-GUARD_BAND..=1.0 + GUARD_BAND).contains(&raw),
            "computed probability {raw} is outside the round-off guard band"
        );
        Self(raw.clamp(0.0, 1.0))
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    pub fn complement(self) -> Self {
        Self(1.0 - self.0)
    }
}

impl From<Probability> for f64 {
    fn from(p: Probability) -> f64 {
        p.0
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}
