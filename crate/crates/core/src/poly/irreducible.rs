//! Irreducibility over `Q` for small degree.
//!
//! Factor degrees modulo several good primes are intersected first; when
//! that leaves no proper factor degree the polynomial is irreducible. The
//! remaining cases (`x^4 + 1` splits modulo every prime) go through
//! Zassenhaus: Hensel-lift one modular factorization past twice the
//! Mignotte bound and try every product of at most half the lifted factors.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{IntPolynomial, PolyModP};
use crate::arith::is_prime;
use crate::error::invalid;
use crate::Result;

/// Good primes examined for the degree-pattern sieve.
const PATTERN_PRIMES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    /// Carries a nontrivial primitive factor.
    Reducible(IntPolynomial),
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible)
    }
}

/// Decides irreducibility of a nonconstant polynomial over `Q`.
pub fn irreducibility(poly: &IntPolynomial) -> Result<Irreducibility> {
    let d = match poly.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(invalid!("irreducibility of a constant polynomial")),
    };
    let f = poly.primitive_part();
    if d == 1 {
        return Ok(Irreducibility::Irreducible);
    }
    let g = f.gcd(&f.derivative());
    if g.degree().is_some_and(|k| k > 0) {
        return Ok(Irreducibility::Reducible(g));
    }
    let lead = f.leading().cloned().expect("nonzero");
    let disc = f.discriminant()?;

    let mut allowed = vec![true; d + 1];
    let mut chosen: Option<(u64, Vec<PolyModP>)> = None;
    let mut tried = 0;
    let mut p = 2u64;
    while tried < PATTERN_PRIMES {
        p += 1;
        if !is_prime(p as u128) {
            continue;
        }
        let bp = BigInt::from(p);
        if (&lead % &bp).is_zero() || (&disc % &bp).is_zero() {
            continue;
        }
        tried += 1;
        let factors = f.reduce_mod(p).monic().factor_squarefree();
        if factors.len() == 1 {
            return Ok(Irreducibility::Irreducible);
        }
        let mut reachable = vec![false; d + 1];
        reachable[0] = true;
        for fac in &factors {
            let k = fac.degree().unwrap_or(0);
            for s in (k..=d).rev() {
                if reachable[s - k] {
                    reachable[s] = true;
                }
            }
        }
        for (a, r) in allowed.iter_mut().zip(&reachable) {
            *a &= *r;
        }
        if !allowed[1..d].iter().any(|&a| a) {
            return Ok(Irreducibility::Irreducible);
        }
        if chosen
            .as_ref()
            .is_none_or(|(_, best)| factors.len() < best.len())
        {
            chosen = Some((p, factors));
        }
    }
    let (p, factors) = chosen.expect("at least one good prime");
    Ok(zassenhaus(&f, p, &factors))
}

fn zassenhaus(f: &IntPolynomial, p: u64, factors: &[PolyModP]) -> Irreducibility {
    let d = f.degree().expect("nonconstant");
    let lead = f.leading().cloned().expect("nonzero");
    let norm_sq: BigUint = f
        .coeffs()
        .iter()
        .map(|c| c.magnitude() * c.magnitude())
        .sum();
    let bound = lead.magnitude() * (BigUint::one() << d) * (norm_sq.sqrt() + 1u8);
    let target = bound * 2u8;
    let bp = BigInt::from(p);
    let mut modulus = bp.clone();
    while modulus.magnitude() <= &target {
        modulus *= &bp;
    }
    let lifted = lift_all(f, factors, p, &modulus);
    let r = lifted.len();
    let half = &modulus >> 1;
    for size in 1..=r / 2 {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            let mut prod = vec![lead.mod_floor(&modulus)];
            for &i in &subset {
                prod = mul_mod(&prod, &lifted[i], &modulus);
            }
            let candidate = IntPolynomial::new(
                prod.into_iter()
                    .map(|c| if c > half { c - &modulus } else { c })
                    .collect(),
            )
            .primitive_part();
            if candidate.degree().is_some_and(|k| k >= 1 && k < d)
                && f.div_exact(&candidate).is_some()
            {
                return Irreducibility::Reducible(candidate);
            }
            if !next_subset(&mut subset, r) {
                break;
            }
        }
    }
    Irreducibility::Irreducible
}

fn next_subset(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    for i in (0..k).rev() {
        if subset[i] < n - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

type ZqPoly = Vec<BigInt>;

fn trim(mut v: ZqPoly) -> ZqPoly {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn mul_mod(a: &[BigInt], b: &[BigInt], q: &BigInt) -> ZqPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out.into_iter().map(|c| c.mod_floor(q)).collect())
}

fn to_zq(f: &PolyModP) -> ZqPoly {
    f.coeffs().iter().map(|&c| BigInt::from(c)).collect()
}

fn from_zq(v: &[BigInt], p: u64) -> PolyModP {
    let bp = BigInt::from(p);
    PolyModP::new(
        p,
        v.iter()
            .map(|c| u64::try_from(c.mod_floor(&bp)).expect("residue below p"))
            .collect(),
    )
}

/// Lifts `f ≡ lc(f)·∏ factors (mod p)` to monic factors modulo `q = p^a`.
fn lift_all(f: &IntPolynomial, factors: &[PolyModP], p: u64, q: &BigInt) -> Vec<ZqPoly> {
    let target: ZqPoly = f.coeffs().iter().map(|c| c.mod_floor(q)).collect();
    let mut out = Vec::with_capacity(factors.len());
    let mut rest = target;
    for (i, u) in factors.iter().enumerate() {
        if i + 1 == factors.len() {
            // rest ≡ lc·u; make it monic
            let lead = rest.last().cloned().expect("nonzero");
            let inv = mod_inverse(&lead, q);
            out.push(trim(rest.iter().map(|c| (c * &inv).mod_floor(q)).collect()));
            break;
        }
        let lead = rest.last().cloned().expect("nonzero");
        let v = factors[i + 1..]
            .iter()
            .fold(from_zq(core::slice::from_ref(&lead), p), |acc, g| {
                acc.mul(g)
            });
        let (big_u, big_v) = lift_pair(&rest, u, &v, p, q);
        out.push(big_u);
        rest = big_v;
    }
    out
}

/// Linear Hensel step loop for `F ≡ u·v (mod p)`, `u` monic and
/// `lc(v) ≡ lc(F)`, up to modulus `q`.
fn lift_pair(f: &[BigInt], u: &PolyModP, v: &PolyModP, p: u64, q: &BigInt) -> (ZqPoly, ZqPoly) {
    let (g, s, t) = PolyModP::ext_gcd(u, v);
    debug_assert!(g.is_one(), "modular factors must be coprime");
    let mut big_u = to_zq(u);
    let mut big_v = to_zq(v);
    // pin the leading coefficient of V to lc(F) exactly
    if let (Some(last), Some(lf)) = (big_v.last_mut(), f.last()) {
        *last = lf.mod_floor(q);
    }
    let bp = BigInt::from(p);
    let mut pk = bp.clone();
    while &pk < q {
        let uv = mul_mod(&big_u, &big_v, q);
        let n = f.len().max(uv.len());
        let err: ZqPoly = (0..n)
            .map(|i| {
                let a = f.get(i).cloned().unwrap_or_default();
                let b = uv.get(i).cloned().unwrap_or_default();
                (a - b).mod_floor(q)
            })
            .collect();
        let c: ZqPoly = err.iter().map(|e| e / &pk).collect();
        let c = from_zq(&c, p);
        let (quot, tau) = t.mul(&c).div_rem(u);
        let sigma = s.mul(&c).add(&quot.mul(v));
        big_u = add_scaled(&big_u, &to_zq(&tau), &pk, q);
        big_v = add_scaled(&big_v, &to_zq(&sigma), &pk, q);
        pk *= &bp;
    }
    (big_u, big_v)
}

fn add_scaled(a: &[BigInt], b: &[BigInt], k: &BigInt, q: &BigInt) -> ZqPoly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_default();
                let y = b.get(i).cloned().unwrap_or_default();
                (x + y * k).mod_floor(q)
            })
            .collect(),
    )
}

fn mod_inverse(a: &BigInt, q: &BigInt) -> BigInt {
    let e = a.extended_gcd(q);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn irreducible(c: &[i64]) -> bool {
        irreducibility(&p(c)).unwrap().is_irreducible()
    }

    #[test]
    fn classic_cases() {
        assert!(irreducible(&[1, 0, 1]));
        assert!(irreducible(&[-2, 0, 0, 1]));
        assert!(irreducible(&[-5, 1]));
        assert!(irreducible(&[1, 0, 0, 0, 1])); // x^4 + 1
        assert!(!irreducible(&[4, 0, 0, 0, 1])); // (x^2+2x+2)(x^2-2x+2)
        assert!(!irreducible(&[-4, 0, 1]));
        assert!(!irreducible(&[2, 0, 3, 0, 1])); // (x^2+1)(x^2+2)
        assert!(!irreducible(&[1, 2, 1])); // repeated factor
        assert!(irreducible(&[2, 0, 2])); // content only
        assert!(irreducibility(&p(&[7])).is_err());
    }

    #[test]
    fn reducible_returns_a_true_factor() {
        let f = &p(&[1, 1, 0, 1]) * &p(&[-3, 2, 0, 0, 5]);
        match irreducibility(&f).unwrap() {
            Irreducibility::Reducible(g) => {
                assert!(f.div_exact(&g).is_some());
                let k = g.degree().unwrap();
                assert!((1..7).contains(&k));
            }
            Irreducibility::Irreducible => panic!("product reported irreducible"),
        }
    }

    #[test]
    fn swinnerton_dyer_quartic() {
        // minimal polynomial of √2 + √3, reducible modulo every prime
        assert!(irreducible(&[1, 0, -10, 0, 1]));
        // (x^2 - 2)(x^2 - 3) has the same splitting pattern but factors
        assert!(!irreducible(&[6, 0, -5, 0, 1]));
    }

    #[test]
    fn non_monic() {
        assert!(!irreducible(&[-1, 0, 4])); // (2x-1)(2x+1)
        assert!(irreducible(&[-1, 0, 3]));
        assert!(!irreducible(&[3, 5, 2])); // (2x+3)(x+1)
    }
}
