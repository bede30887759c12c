use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Retry cap for every randomised partition.
pub const RETRY_CAP: usize = 100;

/// Seeded randomness for the sampling stages.
///
/// The stream is ChaCha8 seeded with `ChaCha8Rng::seed_from_u64(seed)`,
/// which is specified independently of platform and word size.
#[derive(Debug, Clone)]
pub struct RandomSource {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        RandomSource {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// True with probability `num / den`.
    pub fn bernoulli(&mut self, num: u32, den: u32) -> bool {
        self.rng.gen_range(0..den) < num
    }

    /// Run `attempt` until it yields a value, at most [`RETRY_CAP`] times.
    /// Returns the value and the number of attempts used.
    pub(crate) fn retry<T>(
        &mut self,
        stage: &str,
        mut attempt: impl FnMut(&mut Self) -> Option<T>,
    ) -> Result<(T, usize)> {
        for i in 1..=RETRY_CAP {
            if let Some(v) = attempt(self) {
                return Ok((v, i));
            }
        }
        Err(Error::RandomnessFailure {
            stage: stage.to_string(),
            seed: self.seed,
            attempts: RETRY_CAP,
        })
    }
}
