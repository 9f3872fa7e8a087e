//! Prime lists cached on disk as little-endian `u64` words.

use std::fs;
use std::path::{Path, PathBuf};

use prodap_core::sieve::{sieve, PrimeSieve};

/// Directory for cached sieves; unset disables caching.
pub const CACHE_ENV: &str = "PRODAP_SIEVE_CACHE";

fn cache_file(dir: &Path, limit: u64) -> PathBuf {
    dir.join(format!("primes-{limit}.bin"))
}

fn load(path: &Path, limit: u64) -> Option<PrimeSieve> {
    let bytes = fs::read(path).ok()?;
    if bytes.len() % 8 != 0 {
        return None;
    }
    let primes = bytes
        .chunks_exact(8)
        .map(|c| u64::from_le_bytes(c.try_into().expect("8 bytes")))
        .collect();
    PrimeSieve::from_primes(limit, primes)
}

/// Primes up to `limit`, read from or written to `dir` when given. A
/// corrupt or unwritable cache falls back to sieving.
pub fn primes_upto(limit: u64, dir: Option<&Path>) -> PrimeSieve {
    let Some(dir) = dir else {
        return sieve(limit);
    };
    let path = cache_file(dir, limit);
    if let Some(s) = load(&path, limit) {
        return s;
    }
    let s = sieve(limit);
    let bytes: Vec<u8> = s.primes().iter().flat_map(|p| p.to_le_bytes()).collect();
    let _ = fs::create_dir_all(dir).and_then(|_| fs::write(&path, bytes));
    s
}

/// Cache directory from the environment.
pub fn cache_dir() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
}
