//! Seeded rational sampling. Same seed, same stream.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::qcore::{QVector, Rational};

pub const DEFAULT_BOUND: i64 = 1000;

pub struct RationalSampler {
    rng: ChaCha8Rng,
    bound: i64,
}

impl RationalSampler {
    pub fn new(seed: u64) -> Self {
        Self::with_bound(seed, DEFAULT_BOUND)
    }

    pub fn with_bound(seed: u64, bound: i64) -> Self {
        assert!(bound >= 2, "bound must be at least 2");
        RationalSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            bound,
        }
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    /// `p/q` with `|p| <= bound`, `1 <= q <= bound`.
    pub fn rational(&mut self) -> Rational {
        let n = self.rng.gen_range(-self.bound..=self.bound);
        let d = self.rng.gen_range(1..=self.bound);
        Rational::new(n, d)
    }

    pub fn non_integer(&mut self) -> Rational {
        loop {
            let x = self.rational();
            if !x.is_integer() {
                return x;
            }
        }
    }

    /// A rational strictly inside `(lo, hi)`.
    pub fn in_open(&mut self, lo: &Rational, hi: &Rational) -> Rational {
        let k = self.rng.gen_range(1..self.bound);
        lo + &((hi - lo) * Rational::new(k, self.bound))
    }

    pub fn integer(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn vector(&mut self, n: usize) -> QVector {
        QVector((0..n).map(|_| self.rational()).collect())
    }

    /// Small-height rationals; useful where products of many entries grow.
    pub fn small(&mut self, height: i64) -> Rational {
        let n = self.rng.gen_range(-height..=height);
        let d = self.rng.gen_range(1..=height);
        Rational::new(n, d)
    }

    pub fn small_vector(&mut self, n: usize, height: i64) -> QVector {
        QVector((0..n).map(|_| self.small(height)).collect())
    }
}
