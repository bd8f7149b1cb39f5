//! Reproducible random positive rational weights.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{ChainComplex, WeightAssignment};
use crate::error::Result;

/// Name of the generator, recorded in reports next to the seed.
pub const GENERATOR: &str = "ChaCha8";

/// Largest numerator and denominator drawn.
pub const MAX_TERM: i64 = 20;

/// Weights `p/q` with `p, q` uniform in `1..=MAX_TERM`.
#[derive(Clone, Debug)]
pub struct WeightSampler {
    seed: u64,
    rng: ChaCha8Rng,
}

impl WeightSampler {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn rational(&mut self) -> BigRational {
        let p: i64 = self.rng.random_range(1..=MAX_TERM);
        let q: i64 = self.rng.random_range(1..=MAX_TERM);
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    pub fn vector(&mut self, n: usize) -> Vec<BigRational> {
        (0..n).map(|_| self.rational()).collect()
    }

    /// One weight per cell of each listed dimension, drawn in cell order.
    pub fn assignment(&mut self, x: &ChainComplex, dims: &[usize]) -> Result<WeightAssignment> {
        WeightAssignment::from_fn(x, dims, |_, _| self.rational())
    }
}
