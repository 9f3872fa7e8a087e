//! Arithmetic progressions, product sets and brute-force progression search.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::invalid;
use crate::Result;

/// A progression written as `D·(r + d·[N]) = {D·(r + d·i) : 0 ≤ i < N}`.
///
/// `gcd(r, d) = 1` always holds. [`NormalizedAP::scale_coprime`] records the
/// stronger condition `gcd(D·r, d) = 1`, which normalization alone cannot
/// enforce (`[6, 10, 14]` has `D = 2, r = 3, d = 2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NormalizedAP {
    pub scale: u64,
    pub first: u64,
    pub difference: u64,
    pub len: u64,
    pub scale_coprime: bool,
}

impl NormalizedAP {
    /// Builds `D·(r + d·[N])`, rejecting zero parameters and `gcd(r, d) ≠ 1`.
    pub fn new(scale: u64, first: u64, difference: u64, len: u64) -> Result<Self> {
        if scale == 0 || first == 0 || difference == 0 || len == 0 {
            return Err(invalid!(
                "progression parameters must be positive (D={scale}, r={first}, d={difference}, N={len})"
            ));
        }
        if first.gcd(&difference) != 1 {
            return Err(invalid!("gcd(r, d) = gcd({first}, {difference}) must be 1"));
        }
        let scale_coprime = (scale as u128 * first as u128).gcd(&(difference as u128)) == 1;
        Ok(NormalizedAP {
            scale,
            first,
            difference,
            len,
            scale_coprime,
        })
    }

    /// `i`-th term `D·(r + d·i)`.
    pub fn term(&self, i: u64) -> u128 {
        self.scale as u128 * self.reduced_term(i)
    }

    /// `i`-th term of `A/D`, i.e. `r + d·i`.
    pub fn reduced_term(&self, i: u64) -> u128 {
        self.first as u128 + self.difference as u128 * i as u128
    }

    pub fn terms(&self) -> impl Iterator<Item = u128> + '_ {
        (0..self.len).map(|i| self.term(i))
    }
}

/// Recovers `D, r, d, N` from the terms of a progression.
pub fn normalize_ap(values: &[u64]) -> Result<NormalizedAP> {
    let (&a0, _) = values
        .split_first()
        .ok_or_else(|| invalid!("normalize_ap: empty progression"))?;
    if a0 == 0 {
        return Err(invalid!("normalize_ap: terms must be positive"));
    }
    if values.len() == 1 {
        return NormalizedAP::new(a0, 1, 1, 1);
    }
    let step = values[1]
        .checked_sub(a0)
        .filter(|&s| s > 0)
        .ok_or_else(|| invalid!("normalize_ap: terms must be strictly increasing"))?;
    for (i, &v) in values.iter().enumerate() {
        if v as u128 != a0 as u128 + step as u128 * i as u128 {
            return Err(invalid!(
                "normalize_ap: term {i} = {v} breaks the common difference {step}"
            ));
        }
    }
    let scale = a0.gcd(&step);
    NormalizedAP::new(scale, a0 / scale, step / scale, values.len() as u64)
}

/// `B.B` together with its (sorted, deduplicated) base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductSet {
    base: Vec<u64>,
    elements: Vec<u128>,
}

impl ProductSet {
    pub fn base(&self) -> &[u64] {
        &self.base
    }

    pub fn elements(&self) -> &[u128] {
        &self.elements
    }

    pub fn contains(&self, x: u128) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// Lexicographically smallest `(b1, b2)` with `b1 ≤ b2` and `b1·b2 = x`.
    pub fn representation(&self, x: u128) -> Option<(u64, u64)> {
        smallest_representation(&self.base, x)
    }
}

pub(crate) fn smallest_representation(sorted_base: &[u64], x: u128) -> Option<(u64, u64)> {
    for &b1 in sorted_base {
        let b1w = b1 as u128;
        if b1w == 0 {
            if x == 0 {
                return Some((0, 0));
            }
            continue;
        }
        if b1w * b1w > x {
            break;
        }
        if x.is_multiple_of(b1w) {
            let q = x / b1w;
            if let Ok(b2) = u64::try_from(q) {
                if sorted_base.binary_search(&b2).is_ok() {
                    return Some((b1, b2));
                }
            }
        }
    }
    None
}

/// All products `b·b'` of a nonempty base set, squares included.
pub fn product_set(base: &[u64]) -> Result<ProductSet> {
    if base.is_empty() {
        return Err(invalid!("product_set: empty base"));
    }
    let mut base = base.to_vec();
    base.sort_unstable();
    base.dedup();
    let mut elements = Vec::with_capacity(base.len() * (base.len() + 1) / 2);
    for (i, &b) in base.iter().enumerate() {
        for &c in &base[i..] {
            elements.push(b as u128 * c as u128);
        }
    }
    elements.sort_unstable();
    elements.dedup();
    Ok(ProductSet { base, elements })
}

/// `{first + difference·i : 0 ≤ i < len}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ApWitness {
    pub first: u128,
    pub difference: u128,
    pub len: usize,
}

impl ApWitness {
    pub fn terms(&self) -> impl Iterator<Item = u128> + '_ {
        (0..self.len as u128).map(|i| self.first + self.difference * i)
    }
}

/// Longest progression (positive difference) inside a nonempty set.
///
/// Exhaustive over ordered pairs `(a, a')` taken as the first two terms,
/// each extended greedily; pairs whose predecessor `a − (a' − a)` is in the
/// set are skipped since they sit inside a longer run. Ties keep the first
/// witness in `(a, a')` order.
pub fn longest_ap_in_set(set: &[u128]) -> Option<ApWitness> {
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    let &first = s.first()?;
    let mut best = ApWitness {
        first,
        difference: 1,
        len: 1,
    };
    let contains = |x: u128| s.binary_search(&x).is_ok();
    for (i, &a) in s.iter().enumerate() {
        let max_val = *s.last().unwrap();
        for &b in &s[i + 1..] {
            let d = b - a;
            // no room left to beat the current best
            if a + d * best.len as u128 > max_val {
                break;
            }
            if a >= d && contains(a - d) {
                continue;
            }
            let mut len = 2;
            let mut next = b + d;
            while contains(next) {
                len += 1;
                next += d;
            }
            if len > best.len {
                best = ApWitness {
                    first: a,
                    difference: d,
                    len,
                };
            }
        }
    }
    Some(best)
}

/// Whether every term of `ap` lies in `B.B`.
pub fn contains_ap(base: &[u64], ap: &NormalizedAP) -> bool {
    let mut sorted = base.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    ap.terms()
        .all(|t| smallest_representation(&sorted, t).is_some())
}

/// Output of [`cover_search`].
#[derive(Debug, Clone, PartialEq)]
pub struct Cover {
    pub base: Vec<u64>,
    /// `N / (|B| ln |B|)`, or `0` when `|B| < 3`.
    pub ratio: f64,
}

/// Greedy multiplicative cover: a set `B` with `{1, …, N} ⊆ B.B`.
///
/// Values are processed in increasing order. An uncovered value `v` adds the
/// factor pair `(a, b)`, `a ≤ b`, `a·b = v`, that introduces the fewest new
/// elements, preferring the smallest `a`.
pub fn cover_search(n: u64) -> Result<Cover> {
    if n == 0 {
        return Err(invalid!("cover_search: N must be positive"));
    }
    let mut base: BTreeSet<u64> = BTreeSet::new();
    for v in 1..=n {
        let mut best: Option<(usize, u64)> = None;
        let mut a = 1u64;
        while a as u128 * a as u128 <= v as u128 {
            if v % a == 0 {
                let b = v / a;
                let cost = match (base.contains(&a), base.contains(&b)) {
                    (true, true) => 0,
                    (false, false) if a != b => 2,
                    (true, false) | (false, true) | (false, false) => 1,
                };
                if best.is_none_or(|(c, _)| cost < c) {
                    best = Some((cost, a));
                }
                if cost == 0 {
                    break;
                }
            }
            a += 1;
        }
        let (cost, a) = best.expect("1·v always factors v");
        if cost > 0 {
            base.insert(a);
            base.insert(v / a);
        }
    }
    let base: Vec<u64> = base.into_iter().collect();
    let m = base.len();
    let ratio = if m >= 3 {
        n as f64 / (m as f64 * libm::log(m as f64))
    } else {
        0.0
    };
    Ok(Cover { base, ratio })
}
