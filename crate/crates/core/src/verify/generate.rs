//! Seeded instance generation.
//!
//! Each instance draws from its own ChaCha8 stream: the generator is seeded
//! with `seed ^ salt` (the salt separates suites) and the stream number is the
//! instance's sequence number, so instances can be produced in any order or
//! in parallel and still come out identical.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rootsets::RootMultiset;
use crate::scalar::{rat, Rational};

pub struct Gen {
    rng: ChaCha8Rng,
    bound: i64,
}

impl Gen {
    pub fn new(seed: u64, salt: u64, index: u64, coeff_bound: u64) -> Gen {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ salt);
        rng.set_stream(index);
        Gen { rng, bound: coeff_bound.max(1) as i64 }
    }

    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> Option<&'a T> {
        items.choose(&mut self.rng)
    }

    /// `p/q` with `|p| <= bound` and `1 <= q <= bound`.
    pub fn rational(&mut self) -> Rational {
        let p = self.rng.gen_range(-self.bound..=self.bound);
        let q = self.rng.gen_range(1..=self.bound);
        Rational::new(p.into(), q.into())
    }

    /// `k` pairwise distinct rationals, none of them in `avoid`.
    pub fn distinct_values(&mut self, k: usize, avoid: &[Rational]) -> Vec<Rational> {
        let mut out: Vec<Rational> = Vec::with_capacity(k);
        let mut attempts = 0usize;
        while out.len() < k {
            attempts += 1;
            // A tiny bound may not admit enough distinct values; fall back to
            // integers just outside it.
            let v = if attempts < 5000 {
                self.rational()
            } else {
                rat(self.bound + attempts as i64)
            };
            if !out.contains(&v) && !avoid.contains(&v) {
                out.push(v);
            }
        }
        out
    }

    /// Random composition of `total` into positive parts. With
    /// `force_repeat` (and `total >= 2`) at least one part is at least 2.
    pub fn composition(&mut self, total: usize, force_repeat: bool) -> Vec<usize> {
        if total == 0 {
            return Vec::new();
        }
        loop {
            let mut parts = Vec::new();
            let mut run = 1;
            for _ in 1..total {
                if self.rng.gen_bool(0.5) {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            if !force_repeat || total < 2 || parts.iter().any(|&p| p >= 2) {
                return parts;
            }
        }
    }

    /// A multiset of length `deg`. Distinct values avoid `avoid`; each one is
    /// taken from `share` instead with probability `p_share` while unused
    /// shared values remain.
    pub fn multiset(
        &mut self,
        deg: usize,
        force_repeat: bool,
        avoid: &[Rational],
        share: &[Rational],
        p_share: f64,
    ) -> RootMultiset {
        let parts = self.composition(deg, force_repeat);
        let mut pool: Vec<Rational> = share.to_vec();
        pool.shuffle(&mut self.rng);
        let mut values = Vec::with_capacity(parts.len());
        for _ in 0..parts.len() {
            if !pool.is_empty() && self.rng.gen_bool(p_share) {
                values.push(pool.pop().unwrap());
            } else {
                let mut taken: Vec<Rational> = avoid.to_vec();
                taken.extend(values.iter().cloned());
                taken.extend(pool.iter().cloned());
                values.push(self.distinct_values(1, &taken).pop().unwrap());
            }
        }
        RootMultiset::from_pairs(values.into_iter().zip(parts)).expect("positive parts")
    }

    /// A set of `k` distinct values avoiding `avoid`.
    pub fn set(&mut self, k: usize, avoid: &[Rational]) -> RootMultiset {
        RootMultiset::from_values(self.distinct_values(k, avoid))
    }

    /// Sorted `k`-subset of `{1, ..., n}`.
    pub fn subset(&mut self, n: usize, k: usize) -> Vec<usize> {
        let mut all: Vec<usize> = (1..=n).collect();
        all.shuffle(&mut self.rng);
        let mut s: Vec<usize> = all.into_iter().take(k).collect();
        s.sort_unstable();
        s
    }
}
