//! Elementary integer arithmetic: `ord_p`, `ω(n, k)`, gcd of a set and full
//! factorization of integers below `2^128`.

use alloc::vec::Vec;

use num_integer::Integer;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::invalid;
use crate::Result;

/// Trial division bound used before switching to Pollard rho.
pub const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

/// Canonical factorization `base = ∏ prime^exponent`, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub base: u128,
    pub factors: Vec<(u128, u32)>,
}

impl Factorization {
    /// Distinct primes dividing `base`, ascending.
    pub fn primes(&self) -> impl Iterator<Item = u128> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Multiplies the prime powers back together.
    pub fn product(&self) -> u128 {
        self.factors
            .iter()
            .fold(1u128, |acc, &(p, e)| acc * p.pow(e))
    }

    pub fn exponent_of(&self, p: u128) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }
}

/// Exponent of the largest power of `p` dividing `n`.
pub fn ord_p(p: u128, n: u128) -> Result<u32> {
    if !is_prime(p) {
        return Err(invalid!("ord_p: {p} is not prime"));
    }
    if n == 0 {
        return Err(invalid!("ord_p: order of 0 is undefined"));
    }
    Ok(valuation(p, n))
}

/// `ord_p` without validation; `p ≥ 2`, `n ≥ 1`.
pub(crate) fn valuation(p: u128, mut n: u128) -> u32 {
    let mut e = 0;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    e
}

/// Number of distinct primes `p ≥ k` dividing `n`. `omega_ge(n, 0)` is `ω(n)`.
pub fn omega_ge(n: u128, k: u128) -> Result<usize> {
    if n == 0 {
        return Err(invalid!("omega_ge: n must be positive"));
    }
    Ok(factorize(n)?.primes().filter(|&p| p >= k).count())
}

/// Greatest common divisor of a nonempty collection.
pub fn gcd_of_set(values: &[u128]) -> Result<u128> {
    let (&first, rest) = values
        .split_first()
        .ok_or_else(|| invalid!("gcd_of_set: empty set"))?;
    Ok(rest.iter().fold(first, |g, v| g.gcd(v)))
}

/// Full factorization of `n ≥ 1`.
///
/// Trial division by small primes strips everything below
/// [`TRIAL_DIVISION_LIMIT`]; remaining composite cofactors are split with
/// Brent's variant of Pollard rho and certified with Miller–Rabin.
pub fn factorize(n: u128) -> Result<Factorization> {
    if n == 0 {
        return Err(invalid!("factorize: n must be positive"));
    }
    let mut factors: Vec<(u128, u32)> = Vec::new();
    let mut m = n;
    for p in [2u128, 3, 5] {
        let e = strip(&mut m, p);
        if e > 0 {
            factors.push((p, e));
        }
    }
    // 30-wheel over the residues coprime to 30
    const WHEEL: [u128; 8] = [7, 11, 13, 17, 19, 23, 29, 31];
    let mut base = 0u128;
    let mut primality_checked = false;
    'trial: loop {
        for w in WHEEL {
            let p = base + w;
            if p > TRIAL_DIVISION_LIMIT as u128 || p * p > m {
                break 'trial;
            }
            let e = strip(&mut m, p);
            if e > 0 {
                factors.push((p, e));
            }
        }
        base += 30;
        if !primality_checked && base >= 1024 {
            // big prime cofactors are common; stop wasting divisions on them
            primality_checked = true;
            if m > 1 && is_prime(m) {
                break;
            }
        }
    }
    if m > 1 {
        let mut rest = Vec::new();
        split_large(m, &mut rest);
        rest.sort_unstable();
        for p in rest {
            match factors.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => factors.push((p, 1)),
            }
        }
    }
    factors.sort_unstable();
    Ok(Factorization { base: n, factors })
}

fn strip(m: &mut u128, p: u128) -> u32 {
    let mut e = 0;
    while (*m).is_multiple_of(p) {
        *m /= p;
        e += 1;
    }
    e
}

/// Pushes every prime factor (with repetition) of `m > 1` whose prime factors
/// all exceed the trial division range.
fn split_large(m: u128, out: &mut Vec<u128>) {
    if m == 1 {
        return;
    }
    if is_prime(m) {
        out.push(m);
        return;
    }
    let root = isqrt(m);
    if root * root == m {
        split_large(root, out);
        split_large(root, out);
        return;
    }
    let d = pollard_brent(m);
    split_large(d, out);
    split_large(m / d, out);
}

pub(crate) fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = libm::sqrt(n as f64) as u128;
    while x.checked_mul(x).is_none_or(|sq| sq > n) {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).is_some_and(|sq| sq <= n) {
        x += 1;
    }
    x
}

/// `a·b mod m` without overflow for any `m < 2^128`.
pub fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    if let (Ok(a64), Ok(b64)) = (u64::try_from(a), u64::try_from(b)) {
        return (a64 as u128 * b64 as u128) % m;
    }
    let mut a = a % m;
    let mut b = b % m;
    let mut acc = 0u128;
    while b > 0 {
        if b & 1 == 1 {
            acc = add_mod(acc, a, m);
        }
        a = add_mod(a, a, m);
        b >>= 1;
    }
    acc
}

fn add_mod(a: u128, b: u128, m: u128) -> u128 {
    if a >= m - b {
        a - (m - b)
    } else {
        a + b
    }
}

pub fn pow_mod(mut base: u128, mut exp: u128, m: u128) -> u128 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u128;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

// First twelve primes decide every n < 3.3·10^24; the extra bases only
// matter above that range.
const MR_BASES: [u128; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

/// Miller–Rabin with fixed bases. Exact for `n < 3.3·10^24`.
pub fn is_prime(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for p in MR_BASES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    let bases: &[u128] = if n < (1u128 << 64) {
        &MR_BASES[..12]
    } else {
        &MR_BASES
    };
    'witness: for &a in bases {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Nontrivial divisor of an odd composite `n` that is not a perfect square.
fn pollard_brent(n: u128) -> u128 {
    let mut rng = ChaCha8Rng::seed_from_u64(n as u64 ^ (n >> 64) as u64);
    loop {
        let c = 1 + (rng.next_u64() as u128) % (n - 1);
        let mut y = (rng.next_u64() as u128) % n;
        let step = |v: u128| add_mod(mul_mod(v, v, n), c, n);
        let batch = 128u64;
        let mut r = 1u64;
        let mut q = 1u128;
        let mut g = 1u128;
        let mut x = y;
        let mut ys = y;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = step(y);
            }
            let mut k = 0u64;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..batch.min(r - k) {
                    y = step(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += batch;
            }
            r *= 2;
        }
        if g == n {
            // batch overshot; replay one step at a time
            loop {
                ys = step(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
}
