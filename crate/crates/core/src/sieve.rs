//! Sieve of Eratosthenes, segmented above [`SEGMENT_THRESHOLD`].

use alloc::vec;
use alloc::vec::Vec;

/// Limits above this value are sieved in fixed-size segments.
pub const SEGMENT_THRESHOLD: u64 = 10_000_000;
const SEGMENT_LEN: u64 = 1 << 18;

/// All primes `≤ limit`, strictly ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeSieve {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeSieve {
    pub fn new(limit: u64) -> Self {
        let primes = if limit <= SEGMENT_THRESHOLD {
            simple(limit)
        } else {
            segmented(limit)
        };
        PrimeSieve { limit, primes }
    }

    /// Wraps an externally stored prime list, e.g. a cached sieve.
    ///
    /// Returns `None` unless `primes` is strictly ascending and bounded by
    /// `limit`. Primality is spot-checked on a sample of entries.
    pub fn from_primes(limit: u64, primes: Vec<u64>) -> Option<Self> {
        let ascending = primes.windows(2).all(|w| w[0] < w[1]);
        let bounded = primes.last().is_none_or(|&p| p <= limit);
        let sample_ok = primes
            .iter()
            .step_by(primes.len() / 64 + 1)
            .all(|&p| crate::arith::is_prime(p as u128));
        (ascending && bounded && sample_ok).then_some(PrimeSieve { limit, primes })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn contains(&self, n: u64) -> bool {
        self.primes.binary_search(&n).is_ok()
    }

    /// `π(x)` for `x ≤ limit`.
    pub fn count_upto(&self, x: u64) -> usize {
        self.primes.partition_point(|&p| p <= x)
    }

    pub fn into_primes(self) -> Vec<u64> {
        self.primes
    }
}

/// Primes `≤ limit`; shorthand for `PrimeSieve::new(limit)`.
pub fn sieve(limit: u64) -> PrimeSieve {
    PrimeSieve::new(limit)
}

fn simple(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut i = 2;
    while i * i <= n {
        if !composite[i] {
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
        i += 1;
    }
    (2..=n)
        .filter(|&k| !composite[k])
        .map(|k| k as u64)
        .collect()
}

fn segmented(limit: u64) -> Vec<u64> {
    let root = crate::arith::isqrt(limit as u128) as u64;
    let base = simple(root);
    let mut primes = base.clone();
    let mut low = root + 1;
    let mut marks = vec![false; SEGMENT_LEN as usize];
    while low <= limit {
        let high = (low + SEGMENT_LEN - 1).min(limit);
        let span = (high - low + 1) as usize;
        marks[..span].fill(false);
        for &p in &base {
            if p * p > high {
                break;
            }
            let mut start = low.div_ceil(p) * p;
            if start < p * p {
                start = p * p;
            }
            let mut j = start;
            while j <= high {
                marks[(j - low) as usize] = true;
                j += p;
            }
        }
        primes.extend(
            marks[..span]
                .iter()
                .enumerate()
                .filter(|(_, &c)| !c)
                .map(|(k, _)| low + k as u64),
        );
        low = high + 1;
    }
    primes
}
