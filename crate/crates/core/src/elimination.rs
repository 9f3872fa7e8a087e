//! Erdős elimination on `r + d·[N]` and the results built on top of it.
//!
//! For every prime `p` dividing `Π = ∏ (r + i·d)` one term of maximal
//! `ord_p` is left out. Primes are processed in ascending order and ties go
//! to the lowest index. When the chosen term was already left out for a
//! smaller prime, nothing new is removed and the prime is recorded as
//! absorbed. The survivors then satisfy
//! `r(r+d)…(r+(N−1−M)d) ≤ (N−1)!`, where `M` counts removed terms.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::arith::{factorize, gcd_of_set};
use crate::error::invalid;
use crate::progression::product_set;
use crate::Result;

/// A term `r + index·d` left out for `prime`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Removal {
    pub prime: u128,
    pub index: u64,
    pub term: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationResult {
    pub first: u64,
    pub difference: u64,
    pub len: u64,
    /// One entry per removed term, in ascending prime order.
    pub removed: Vec<Removal>,
    /// Primes whose maximal-order term had already been removed, with the
    /// index of that term.
    pub absorbed: Vec<(u128, u64)>,
    /// `(index, term)` of every term that was not removed, ascending.
    pub survivors: Vec<(u64, u128)>,
}

impl EliminationResult {
    /// `M`, the number of removed terms.
    pub fn removed_count(&self) -> usize {
        self.removed.len()
    }

    /// Every prime factor of `Π`, ascending.
    pub fn primes(&self) -> Vec<u128> {
        let mut ps: Vec<u128> = self
            .removed
            .iter()
            .map(|r| r.prime)
            .chain(self.absorbed.iter().map(|&(p, _)| p))
            .collect();
        ps.sort_unstable();
        ps
    }

    /// Whether the product of the surviving terms divides `(N−1)!`.
    pub fn survivors_divide_factorial(&self) -> bool {
        let product = self
            .survivors
            .iter()
            .fold(BigUint::one(), |acc, &(_, t)| acc * BigUint::from(t));
        (factorial(self.len.saturating_sub(1)) % product) == BigUint::ZERO
    }
}

fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// Runs the elimination on `r + d·[N]`; requires `gcd(r, d) = 1`.
pub fn eliminate(r: u64, d: u64, len: u64) -> Result<EliminationResult> {
    if r == 0 || d == 0 || len == 0 {
        return Err(invalid!("eliminate: r, d and N must be positive"));
    }
    if r.gcd(&d) != 1 {
        return Err(invalid!("eliminate: gcd(r, d) = {} ≠ 1", r.gcd(&d)));
    }
    let term = |i: u64| r as u128 + d as u128 * i as u128;
    // prime -> (index of first term with maximal order, that order)
    let mut champion: BTreeMap<u128, (u64, u32)> = BTreeMap::new();
    for i in 0..len {
        for &(p, e) in &factorize(term(i))?.factors {
            champion
                .entry(p)
                .and_modify(|best| {
                    if e > best.1 {
                        *best = (i, e);
                    }
                })
                .or_insert((i, e));
        }
    }
    let mut taken = alloc::vec![false; len as usize];
    let mut removed = Vec::new();
    let mut absorbed = Vec::new();
    for (&prime, &(index, _)) in &champion {
        if taken[index as usize] {
            absorbed.push((prime, index));
        } else {
            taken[index as usize] = true;
            removed.push(Removal {
                prime,
                index,
                term: term(index),
            });
        }
    }
    let survivors = (0..len)
        .filter(|&i| !taken[i as usize])
        .map(|i| (i, term(i)))
        .collect();
    Ok(EliminationResult {
        first: r,
        difference: d,
        len,
        removed,
        absorbed,
        survivors,
    })
}

/// Both sides of `r(r+d)…(r+(N−1−M)d) ≤ (N−1)!` in exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErdosSides {
    pub lhs: BigUint,
    pub rhs: BigUint,
}

impl ErdosSides {
    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs
    }
}

pub fn erdos_sides(result: &EliminationResult) -> ErdosSides {
    let m = result.removed_count() as u64;
    let (r, d) = (result.first, result.difference);
    // indices 0..=N-1-M; empty when M = N
    let lhs = (0..result.len - m).fold(BigUint::one(), |acc, i| {
        acc * (BigUint::from(r) + BigUint::from(d) * BigUint::from(i))
    });
    ErdosSides {
        lhs,
        rhs: factorial(result.len - 1),
    }
}

/// Checks the elimination inequality for a result produced on `(r, d, N)`.
pub fn verify_erdos_inequality(
    result: &EliminationResult,
    r: u64,
    d: u64,
    len: u64,
) -> Result<bool> {
    if (result.first, result.difference, result.len) != (r, d, len) {
        return Err(invalid!(
            "verify_erdos_inequality: result belongs to (r={}, d={}, N={}), not ({r}, {d}, {len})",
            result.first,
            result.difference,
            result.len
        ));
    }
    Ok(erdos_sides(result).holds())
}

/// Which side of "either `d, r < N²` or `M > N/2`" holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dichotomy {
    pub len: u64,
    pub removed_count: usize,
    /// `d < N²` and `r < N²`.
    pub small_parameters: bool,
    /// `M > N/2`.
    pub many_removed: bool,
}

impl Dichotomy {
    /// Neither branch holds.
    pub fn violated(&self) -> bool {
        !self.small_parameters && !self.many_removed
    }
}

pub fn dichotomy_check(r: u64, d: u64, len: u64) -> Result<Dichotomy> {
    if len < 2 {
        return Err(invalid!("dichotomy_check: N must be at least 2"));
    }
    let result = eliminate(r, d, len)?;
    let square = len as u128 * len as u128;
    let m = result.removed_count();
    Ok(Dichotomy {
        len,
        removed_count: m,
        small_parameters: (d as u128) < square && (r as u128) < square,
        many_removed: 2 * m as u128 > len as u128,
    })
}

/// Primes `p ≥ N/2` paired with distinct terms such that each selected prime
/// divides exactly one selected term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelectionResult {
    pub len: u64,
    /// `(prime, index, term)`, ascending by prime.
    pub pairs: Vec<Removal>,
    /// Removed pairs discarded because `p < N/2`.
    pub pruned: usize,
    /// Pairs surviving pruning but dropped to keep divisibility unique.
    pub conflicts: usize,
}

impl SelectionResult {
    pub fn size(&self) -> usize {
        self.pairs.len()
    }

    /// `|selection| > N/6`.
    pub fn exceeds_sixth(&self) -> bool {
        6 * self.pairs.len() as u128 > self.len as u128
    }

    /// Direct check that every selected prime divides exactly one selected
    /// term and that primes and terms are pairwise distinct.
    pub fn is_unique_divisor_family(&self) -> bool {
        let mut primes: Vec<u128> = self.pairs.iter().map(|r| r.prime).collect();
        primes.sort_unstable();
        primes.dedup();
        let mut terms: Vec<u128> = self.pairs.iter().map(|r| r.term).collect();
        terms.sort_unstable();
        terms.dedup();
        primes.len() == self.pairs.len()
            && terms.len() == self.pairs.len()
            && self.pairs.iter().all(|pair| {
                self.pairs
                    .iter()
                    .filter(|q| q.term % pair.prime == 0)
                    .count()
                    == 1
                    && pair.term % pair.prime == 0
            })
    }
}

/// Prunes the elimination output to primes `p ≥ N/2` and greedily keeps
/// pairs whose prime divides no other kept term.
pub fn theorem1_selection(r: u64, d: u64, len: u64) -> Result<SelectionResult> {
    let result = eliminate(r, d, len)?;
    let (large, small): (Vec<Removal>, Vec<Removal>) = result
        .removed
        .iter()
        .partition(|rem| 2 * rem.prime >= len as u128);
    let mut pairs: Vec<Removal> = Vec::new();
    let mut conflicts = 0;
    for cand in large {
        let clash = pairs
            .iter()
            .any(|kept| kept.term % cand.prime == 0 || cand.term % kept.prime == 0);
        if clash {
            conflicts += 1;
        } else {
            pairs.push(cand);
        }
    }
    Ok(SelectionResult {
        len,
        pairs,
        pruned: small.len(),
        conflicts,
    })
}

/// Evaluation of the general product-set proposition on concrete `A`, `B`.
#[derive(Debug, Clone, PartialEq)]
pub struct Proposition1Report {
    pub len: usize,
    pub gcd: u128,
    /// `a / gcd(A) < N^{K1}` for every `a`.
    pub size_hypothesis: bool,
    /// `ω(∏ a/gcd(A), K2·N)`.
    pub large_prime_count: usize,
    /// `A ⊆ B.B`.
    pub contained: bool,
    pub base_size: usize,
    /// `|B| / M`; `None` when `M = 0`.
    pub ratio: Option<f64>,
}

pub fn proposition1_check(a: &[u64], b: &[u64], k1: f64, k2: f64) -> Result<Proposition1Report> {
    let mut set: Vec<u128> = a.iter().map(|&x| x as u128).collect();
    set.sort_unstable();
    set.dedup();
    if set.is_empty() {
        return Err(invalid!("proposition1_check: A must be nonempty"));
    }
    if set[0] == 0 {
        return Err(invalid!(
            "proposition1_check: elements of A must be positive"
        ));
    }
    let n = set.len();
    let g = gcd_of_set(&set)?;
    let limit = libm::pow(n as f64, k1);
    let size_hypothesis = set.iter().all(|&x| ((x / g) as f64) < limit);
    let threshold = k2 * n as f64;
    let mut primes: Vec<u128> = Vec::new();
    for &x in &set {
        primes.extend(
            factorize(x / g)?
                .primes()
                .filter(|&p| p as f64 >= threshold),
        );
    }
    primes.sort_unstable();
    primes.dedup();
    let m = primes.len();
    let base_size = {
        let mut bs = b.to_vec();
        bs.sort_unstable();
        bs.dedup();
        bs.len()
    };
    let contained = !b.is_empty() && {
        let ps = product_set(b)?;
        set.iter().all(|&x| ps.contains(x))
    };
    Ok(Proposition1Report {
        len: n,
        gcd: g,
        size_hypothesis,
        large_prime_count: m,
        contained,
        base_size,
        ratio: (m > 0).then(|| base_size as f64 / m as f64),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn removed_pairs(res: &EliminationResult) -> Vec<(u128, u128)> {
        res.removed.iter().map(|r| (r.prime, r.term)).collect()
    }

    #[test]
    fn eliminate_examples() {
        let res = eliminate(1, 1, 5).unwrap();
        assert_eq!(removed_pairs(&res), [(2, 4), (3, 3), (5, 5)]);
        assert_eq!(res.removed_count(), 3);
        assert_eq!(res.survivors, [(0, 1), (1, 2)]);

        let res = eliminate(1, 1, 1).unwrap();
        assert_eq!(res.removed_count(), 0);
        assert_eq!(res.survivors, [(0, 1)]);

        let res = eliminate(1, 2, 4).unwrap();
        assert_eq!(removed_pairs(&res), [(3, 3), (5, 5), (7, 7)]);
        assert_eq!(res.survivors, [(0, 1)]);

        assert!(eliminate(2, 4, 3).is_err());
    }

    #[test]
    fn absorbed_primes_are_tracked() {
        // 1, 27, 53, 79, 105: 7 lands on 105, already taken by 5
        let res = eliminate(1, 26, 5).unwrap();
        assert_eq!(res.removed_count(), 4);
        assert_eq!(res.absorbed, [(7, 4)]);
        assert_eq!(res.primes(), [3, 5, 7, 53, 79]);
    }

    #[test]
    fn erdos_examples() {
        let res = eliminate(1, 1, 5).unwrap();
        let sides = erdos_sides(&res);
        assert_eq!(
            (sides.lhs, sides.rhs),
            (BigUint::from(2u8), BigUint::from(24u8))
        );
        assert_eq!(verify_erdos_inequality(&res, 1, 1, 5), Ok(true));
        let res = eliminate(1, 1, 1).unwrap();
        assert_eq!(verify_erdos_inequality(&res, 1, 1, 1), Ok(true));
        let res = eliminate(1, 2, 4).unwrap();
        assert_eq!(erdos_sides(&res).lhs, BigUint::one());
        assert_eq!(verify_erdos_inequality(&res, 1, 2, 4), Ok(true));
        assert!(verify_erdos_inequality(&res, 1, 2, 5).is_err());
    }

    #[test]
    fn dichotomy_examples() {
        let c = dichotomy_check(1, 1, 5).unwrap();
        assert!(c.small_parameters && !c.violated());
        let c = dichotomy_check(1, 26, 5).unwrap();
        assert_eq!(c.removed_count, 4);
        assert!(!c.small_parameters && c.many_removed);
        assert!(dichotomy_check(1, 1, 2).unwrap().small_parameters);
        assert!(dichotomy_check(1, 1, 1).is_err());
    }

    #[test]
    fn selection_examples() {
        let s = theorem1_selection(1, 1, 10).unwrap();
        let got: Vec<(u128, u128)> = s.pairs.iter().map(|r| (r.prime, r.term)).collect();
        assert_eq!(got, [(5, 5), (7, 7)]);
        assert_eq!(s.pruned, 2);
        assert!(s.is_unique_divisor_family());

        let s = theorem1_selection(1, 1, 2).unwrap();
        assert_eq!(s.pairs.len(), 1);
        assert_eq!((s.pairs[0].prime, s.pairs[0].term), (2, 2));

        assert!(theorem1_selection(1, 1, 1).unwrap().pairs.is_empty());
    }

    #[test]
    fn selection_drops_shared_primes() {
        // r=1, d=1, N=30: 17 and 19 etc. are fine; check the family is valid
        let s = theorem1_selection(1, 1, 30).unwrap();
        assert!(s.is_unique_divisor_family());
        assert!(s.pairs.iter().all(|r| 2 * r.prime >= 30));
    }

    #[test]
    fn proposition_examples() {
        let rep =
            proposition1_check(&[101, 103, 107, 109], &[1, 101, 103, 107, 109], 4.0, 25.0).unwrap();
        assert_eq!(rep.large_prime_count, 4);
        assert_eq!(rep.base_size, 5);
        assert!(rep.contained && rep.size_hypothesis);
        assert_eq!(rep.ratio, Some(1.25));

        let rep = proposition1_check(&[4], &[2], 2.0, 0.25).unwrap();
        assert_eq!(rep.large_prime_count, 0);
        assert_eq!(rep.ratio, None);
        assert!(rep.contained);

        let rep = proposition1_check(&[5], &[2, 3], 1.0, 1.0).unwrap();
        assert!(!rep.contained);
        assert!(proposition1_check(&[], &[1], 1.0, 1.0).is_err());
    }
}
