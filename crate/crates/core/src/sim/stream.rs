//! Deterministic per-trial random streams.
//!
//! A master seed and a [`StreamDomain`] expand (via SplitMix64) into a ChaCha8
//! key. Trial `t` then reads ChaCha8 stream number `t` under that key, so two
//! trials never share a stream and a trial's draws do not depend on which
//! thread runs it or in what order.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 step.
pub(crate) fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(GOLDEN_GAMMA);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives a child seed from `seed` and an index, e.g. a grid cell coordinate.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut state = seed;
    let a = splitmix64(&mut state);
    let mut state = a ^ index;
    splitmix64(&mut state)
}

/// Separates the streams of different experiment kinds sharing a master seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StreamDomain {
    Race,
    CatchUp,
    Wait,
}

impl StreamDomain {
    fn tag(self) -> u64 {
        match self {
            StreamDomain::Race => 0x7261_6365,
            StreamDomain::CatchUp => 0x6361_7463,
            StreamDomain::Wait => 0x7761_6974,
        }
    }
}

/// Factory for the per-trial generators of one experiment.
#[derive(Debug, Clone)]
pub struct Substreams {
    key: [u8; 32],
}

impl Substreams {
    pub fn new(master_seed: u64, domain: StreamDomain) -> Self {
        let mut state = master_seed ^ domain.tag().rotate_left(32);
        let mut key = [0u8; 32];
        for chunk in key.chunks_exact_mut(8) {
            chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
        }
        Self { key }
    }

    /// Generator for trial `index`.
    pub fn stream(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::from_seed(self.key);
        rng.set_stream(index);
        rng
    }
}
