//! Seeded random rationals.
//!
//! Draws have numerator in `[-bound, bound]` and denominator in
//! `[1, bound]`. The seed is kept so callers can put it in certificates.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{Matrix, Scalar};

pub const DEFAULT_BOUND: i64 = 10;

#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
    seed: u64,
    bound: i64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self::with_bound(seed, DEFAULT_BOUND)
    }

    pub fn with_bound(seed: u64, bound: i64) -> Self {
        assert!(bound >= 1, "bound must be positive");
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            seed,
            bound,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn rational(&mut self) -> Scalar {
        let n = self.rng.random_range(-self.bound..=self.bound);
        let d = self.rng.random_range(1..=self.bound);
        Scalar::new(BigInt::from(n), BigInt::from(d))
    }

    pub fn nonzero_rational(&mut self) -> Scalar {
        loop {
            let x = self.rational();
            if x != Scalar::from_integer(BigInt::from(0)) {
                return x;
            }
        }
    }

    pub fn vector(&mut self, len: usize) -> Vec<Scalar> {
        (0..len).map(|_| self.rational()).collect()
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = self.rational();
            }
        }
        m
    }

    /// Random invertible matrix; singular draws are discarded.
    pub fn invertible(&mut self, n: usize) -> Matrix {
        loop {
            let m = self.matrix(n, n);
            if m.is_invertible() {
                return m;
            }
        }
    }

    /// Random linear combination of `basis`; the zero vector of length
    /// `len` when `basis` is empty.
    pub fn combination(&mut self, basis: &[Vec<Scalar>], len: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::from_integer(BigInt::from(0)); len];
        for b in basis {
            let c = self.rational();
            for (o, x) in out.iter_mut().zip(b) {
                *o += &c * x;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn draws_are_reproducible_and_bounded() {
        let mut a = Sampler::new(7);
        let mut b = Sampler::new(7);
        for _ in 0..50 {
            let x = a.rational();
            assert_eq!(x, b.rational());
            assert!(x.numer().magnitude() <= &10u32.into());
            assert!(x.denom() <= &BigInt::from(10));
        }
        assert!(a.invertible(3).is_invertible());
    }
}
