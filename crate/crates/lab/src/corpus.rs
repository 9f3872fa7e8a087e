//! Seeded random inputs. Every generator draws from `ChaCha8Rng` seeded
//! with the experiment seed, so a seed fixes the whole corpus.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` distinct integers from `[1, max]`, ascending.
pub fn random_base(rng: &mut ChaCha8Rng, n: usize, max: u64) -> Vec<u64> {
    let mut v: Vec<u64> = sample(rng, max as usize, n.min(max as usize))
        .into_iter()
        .map(|x| x as u64 + 1)
        .collect();
    v.sort_unstable();
    v
}

/// `count` sets with sizes uniform in `[n_min, n_max]`.
pub fn random_bases(
    seed: u64,
    count: usize,
    n_min: usize,
    n_max: usize,
    max: u64,
) -> Vec<Vec<u64>> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.random_range(n_min..=n_max);
            random_base(&mut r, n, max)
        })
        .collect()
}

/// A divisor of `t` chosen uniformly.
pub fn random_divisor(rng: &mut ChaCha8Rng, t: u128) -> u128 {
    let mut divisors = Vec::new();
    let mut k = 1u128;
    while k * k <= t {
        if t.is_multiple_of(k) {
            divisors.push(k);
            if k * k != t {
                divisors.push(t / k);
            }
        }
        k += 1;
    }
    divisors.sort_unstable();
    divisors[rng.random_range(0..divisors.len())]
}
