//! Seeded, portable randomness. Every random choice in the crate goes
//! through a ChaCha8 stream built here.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Seed used whenever the caller does not choose one.
pub const DEFAULT_SEED: u64 = 0x5EED_BE26_E000_0001;

pub type Rng = ChaCha8Rng;

pub fn rng_from(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seed of trial `index` in a Monte Carlo run.
pub fn trial_seed(seed: u64, index: u64) -> u64 {
    seed ^ index
}
