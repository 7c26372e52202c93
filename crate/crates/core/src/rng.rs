//! Seeded sampling for the randomized identity and oracle runs.
//!
//! The generator is SplitMix64: 64 bits of state, one multiply-xorshift
//! output function, identical streams on every platform for a given seed.

use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::vec2::Vec2;

pub struct Sampler {
    rng: SplitMix64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: SplitMix64::seed_from_u64(seed),
        }
    }

    /// Uniform in `[-range, range]`; exactly zero when `range` is zero.
    pub fn uniform(&mut self, range: f64) -> f64 {
        if range == 0.0 {
            return 0.0;
        }
        self.rng.gen_range(-range..=range)
    }

    pub fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        if lo == hi {
            return lo;
        }
        self.rng.gen_range(lo..=hi)
    }

    pub fn vec2(&mut self, range: f64) -> Vec2 {
        let x = self.uniform(range);
        let y = self.uniform(range);
        Vec2::new(x, y)
    }

    /// Independent child stream.
    pub fn split(&mut self) -> Sampler {
        Sampler::new(self.rng.gen())
    }
}
