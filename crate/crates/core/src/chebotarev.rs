//! Roots and factorization types of an integer polynomial modulo primes,
//! tallied over prime ranges.
//!
//! Scans are split into per-prime records and a mergeable [`PrimeTally`]
//! so callers can partition the prime list and combine partial results in
//! any order.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::is_prime;
use crate::error::invalid;
use crate::logint::log_integral;
use crate::poly::{irreducibility, IntPolynomial, PolyModP};
use crate::sieve::sieve;
use crate::Result;

/// Largest degree accepted by [`chebotarev_empirics`].
pub const MAX_EMPIRICS_DEGREE: usize = 8;

/// Degrees of the irreducible factors of `P mod p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationType {
    pub prime: u64,
    /// `p` divides the discriminant or the leading coefficient.
    pub ramified: bool,
    /// Ascending factor degrees; empty when ramified.
    pub degrees: Vec<usize>,
    /// Monic irreducible factors matching `degrees`; empty when ramified.
    pub factors: Vec<PolyModP>,
}

fn is_ramified(disc: &BigInt, lead: &BigInt, p: u64) -> bool {
    let bp = BigInt::from(p);
    (disc % &bp).is_zero() || (lead % &bp).is_zero()
}

fn check_prime(p: u64) -> Result<()> {
    if !is_prime(p as u128) {
        return Err(invalid!("{p} is not prime"));
    }
    Ok(())
}

pub fn factorization_type(poly: &IntPolynomial, p: u64) -> Result<FactorizationType> {
    check_prime(p)?;
    let f = poly.primitive_part();
    let lead = f
        .leading()
        .cloned()
        .ok_or_else(|| invalid!("factorization type of the zero polynomial"))?;
    let disc = f.discriminant()?;
    Ok(classify(&f, &disc, &lead, p))
}

fn classify(f: &IntPolynomial, disc: &BigInt, lead: &BigInt, p: u64) -> FactorizationType {
    if is_ramified(disc, lead, p) {
        return FactorizationType {
            prime: p,
            ramified: true,
            degrees: Vec::new(),
            factors: Vec::new(),
        };
    }
    let factors = f.reduce_mod(p).monic().factor_squarefree();
    let degrees = factors.iter().map(|g| g.degree().unwrap_or(0)).collect();
    FactorizationType {
        prime: p,
        ramified: false,
        degrees,
        factors,
    }
}

/// Sorted roots of `P` in `F_p`.
pub fn roots_mod_p(poly: &IntPolynomial, p: u64) -> Result<Vec<u64>> {
    check_prime(p)?;
    let f = poly.reduce_mod(p);
    if f.is_zero() {
        return Err(invalid!("polynomial vanishes identically mod {p}"));
    }
    Ok(f.roots())
}

/// Everything recorded about one prime during a scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeRecord {
    pub p: u64,
    pub ramified: bool,
    /// Factor degrees; empty when ramified.
    pub degrees: Vec<usize>,
    pub has_root: bool,
    /// Unramified and all factors linear.
    pub split: bool,
}

/// Partial counts over a set of primes. Merging is associative and
/// commutative.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PrimeTally {
    pub primes: usize,
    pub ramified: usize,
    pub with_root: usize,
    pub split: usize,
    pub histogram: BTreeMap<Vec<usize>, usize>,
}

impl PrimeTally {
    pub fn add(&mut self, record: &PrimeRecord) {
        self.primes += 1;
        if record.ramified {
            self.ramified += 1;
            return;
        }
        self.with_root += usize::from(record.has_root);
        self.split += usize::from(record.split);
        *self.histogram.entry(record.degrees.clone()).or_default() += 1;
    }

    pub fn merge(mut self, other: PrimeTally) -> PrimeTally {
        self.primes += other.primes;
        self.ramified += other.ramified;
        self.with_root += other.with_root;
        self.split += other.split;
        for (k, v) in other.histogram {
            *self.histogram.entry(k).or_default() += v;
        }
        self
    }
}

/// A validated irreducible polynomial with its discriminant cached.
#[derive(Debug, Clone)]
pub struct PrimeScan {
    poly: IntPolynomial,
    disc: BigInt,
    lead: BigInt,
}

impl PrimeScan {
    /// Rejects constant and reducible input. The scan works with the
    /// primitive part.
    pub fn new(poly: &IntPolynomial) -> Result<Self> {
        if !irreducibility(poly)?.is_irreducible() {
            return Err(invalid!("{poly} is reducible over Q"));
        }
        let poly = poly.primitive_part();
        let disc = poly.discriminant()?;
        let lead = poly.leading().cloned().expect("nonconstant");
        Ok(PrimeScan { poly, disc, lead })
    }

    pub fn polynomial(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn discriminant(&self) -> &BigInt {
        &self.disc
    }

    /// `p` must be prime; this is not rechecked.
    pub fn record(&self, p: u64) -> PrimeRecord {
        let t = classify(&self.poly, &self.disc, &self.lead, p);
        if t.ramified {
            let f = self.poly.reduce_mod(p);
            return PrimeRecord {
                p,
                ramified: true,
                degrees: Vec::new(),
                has_root: f.root_count() > 0,
                split: false,
            };
        }
        PrimeRecord {
            p,
            ramified: false,
            has_root: t.degrees.first() == Some(&1),
            split: t.degrees.iter().all(|&d| d == 1),
            degrees: t.degrees,
        }
    }

    pub fn tally(&self, primes: &[u64]) -> PrimeTally {
        let mut t = PrimeTally::default();
        for &p in primes {
            t.add(&self.record(p));
        }
        t
    }

    /// Final report for `x` from a tally covering exactly the primes `≤ x`.
    pub fn report(&self, x: u64, tally: PrimeTally) -> Result<ChebotarevReport> {
        if x < 2 {
            return Err(invalid!("limit x must be at least 2, got {x}"));
        }
        let pi_total = tally.primes;
        let ln_x = libm::log(x as f64);
        Ok(ChebotarevReport {
            polynomial: self.poly.clone(),
            limit: x,
            pi_p: tally.with_root,
            pi_split: tally.split,
            pi_total,
            ramified: tally.ramified,
            type_histogram: tally.histogram,
            group_order_estimate: (tally.split > 0).then(|| pi_total as f64 / tally.split as f64),
            li_x: log_integral(x as f64)?,
            density: tally.with_root as f64 * ln_x / x as f64,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChebotarevReport {
    /// Primitive part of the input.
    pub polynomial: IntPolynomial,
    pub limit: u64,
    /// Unramified primes `≤ x` where `P` has a root.
    pub pi_p: usize,
    /// Unramified primes `≤ x` where `P` splits into linear factors.
    pub pi_split: usize,
    /// `π(x)`.
    pub pi_total: usize,
    pub ramified: usize,
    /// Unramified primes only, so counts sum to `pi_total − ramified`.
    pub type_histogram: BTreeMap<Vec<usize>, usize>,
    /// `pi_total / pi_split`; `None` when no prime split.
    pub group_order_estimate: Option<f64>,
    /// `Li(x) = ∫₂ˣ dt / ln t`.
    pub li_x: f64,
    /// `pi_p · ln x / x`.
    pub density: f64,
}

impl ChebotarevReport {
    pub fn root_fraction(&self) -> f64 {
        self.pi_p as f64 / self.pi_total as f64
    }

    pub fn split_fraction(&self) -> f64 {
        self.pi_split as f64 / self.pi_total as f64
    }
}

/// Counts primes `≤ x` where the irreducible `P` has a root.
#[allow(non_snake_case)]
pub fn pi_P_x(poly: &IntPolynomial, x: u64) -> Result<ChebotarevReport> {
    let scan = PrimeScan::new(poly)?;
    let primes = sieve(x);
    let tally = scan.tally(primes.primes());
    scan.report(x, tally)
}

/// [`pi_P_x`] restricted to degree at most [`MAX_EMPIRICS_DEGREE`].
pub fn chebotarev_empirics(poly: &IntPolynomial, x: u64) -> Result<ChebotarevReport> {
    match poly.degree() {
        Some(d) if d > MAX_EMPIRICS_DEGREE => {
            Err(invalid!("degree {d} exceeds {MAX_EMPIRICS_DEGREE}"))
        }
        _ => pi_P_x(poly, x),
    }
}
