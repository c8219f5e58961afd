use crate::error::{Error, Result};

/// `|p - q|` at or below this is treated as an even race (`p = q = 0.5`).
///
/// Routes the closed forms to their `i / N` branch instead of evaluating `0 / 0`.
pub const EVEN_ODDS_TOLERANCE: f64 = 1e-12;

/// The attacker's share `q` of block-finding probability. The honest share is
/// always derived as `p = 1 - q`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct MiningPowerSplit {
    attacker: f64,
}

impl MiningPowerSplit {
    pub fn new(attacker: f64) -> Result<Self> {
        // written so that NaN is rejected as well
        if attacker > 0.0 && attacker < 1.0 {
            Ok(Self { attacker })
        } else {
            Err(Error::InvalidPower(attacker))
        }
    }

    /// `q`, probability that the attacker finds the next block.
    #[inline]
    pub fn attacker(&self) -> f64 {
        self.attacker
    }

    /// `p = 1 - q`, probability that an honest miner finds the next block.
    #[inline]
    pub fn honest(&self) -> f64 {
        1.0 - self.attacker
    }

    /// `q / p`.
    #[inline]
    pub fn attacker_ratio(&self) -> f64 {
        self.attacker / self.honest()
    }

    pub fn is_even(&self) -> bool {
        (self.honest() - self.attacker).abs() <= EVEN_ODDS_TOLERANCE
    }

    /// True when `p <= q`, counting the even-odds band as a tie.
    pub fn attacker_dominates(&self) -> bool {
        self.honest() <= self.attacker || self.is_even()
    }
}

impl TryFrom<f64> for MiningPowerSplit {
    type Error = Error;

    fn try_from(q: f64) -> Result<Self> {
        Self::new(q)
    }
}
