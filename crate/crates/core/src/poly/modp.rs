//! Dense polynomials over `F_p` for word-sized primes, with distinct-degree
//! and equal-degree (Cantor–Zassenhaus) factorization.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Polynomial over `F_p`, ascending coefficients in `[0, p)`, no trailing
/// zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyModP {
    p: u64,
    coeffs: Vec<u64>,
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powm(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulm(acc, b, p);
        }
        b = mulm(b, b, p);
        e >>= 1;
    }
    acc
}

fn invm(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    powm(a, p - 2, p)
}

impl PolyModP {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyModP { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        PolyModP {
            p,
            coeffs: Vec::new(),
        }
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    /// `x` over `F_p`.
    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn evaluate(&self, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (mulm(acc, x, self.p) + c) % self.p)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = invm(self.leading(), self.p);
        self.scale(inv)
    }

    pub fn scale(&self, k: u64) -> Self {
        Self::new(
            self.p,
            self.coeffs.iter().map(|&c| mulm(c, k, self.p)).collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            self.p,
            (0..n).map(|i| (self.c(i) + other.c(i)) % self.p).collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            self.p,
            (0..n)
                .map(|i| (self.c(i) + self.p - other.c(i)) % self.p)
                .collect(),
        )
    }

    fn c(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p as u128;
        let mut acc = vec![0u128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u128 * b as u128) % p;
            }
        }
        Self::new(self.p, acc.into_iter().map(|c| c as u64).collect())
    }

    /// Quotient and remainder; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let p = self.p;
        let dd = divisor.deg();
        if self.coeffs.len() <= dd {
            return (Self::zero(p), self.clone());
        }
        let inv = invm(divisor.leading(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = rem[i + dd];
            if top == 0 {
                continue;
            }
            let q = mulm(top, inv, p);
            quot[i] = q;
            for (j, &c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = (rem[i + j] + p - mulm(q, c, p)) % p;
            }
        }
        rem.truncate(dd);
        (Self::new(p, quot), Self::new(p, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mulm(c, i as u64 % self.p, self.p))
                .collect(),
        )
    }

    /// `self^exp mod modulus`.
    pub fn pow_mod(&self, exp: &BigUint, modulus: &Self) -> Self {
        let mut acc = Self::one(self.p).rem(modulus);
        let base = self.rem(modulus);
        for i in (0..exp.bits()).rev() {
            acc = acc.mul(&acc).rem(modulus);
            if exp.bit(i) {
                acc = acc.mul(&base).rem(modulus);
            }
        }
        acc
    }

    fn frobenius(&self, modulus: &Self) -> Self {
        self.pow_mod(&BigUint::from(self.p), modulus)
    }

    /// `(g, s, t)` with `g = gcd(a, b)` monic and `s·a + t·b = g`.
    pub fn ext_gcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        let p = a.p;
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = core::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = core::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = core::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = invm(r0.leading(), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    /// No repeated factors over `F_p`.
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => {
                let d = self.derivative();
                !d.is_zero() && self.gcd(&d).is_one()
            }
        }
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// `(d, g_d)` where `g_d` is the product of all irreducible factors of
    /// degree `d`. Only nonconstant `g_d` are returned.
    pub fn distinct_degree(&self) -> Vec<(usize, Self)> {
        let mut out = Vec::new();
        let mut f = self.monic();
        let x = Self::x(self.p);
        let mut h = x.rem(&f);
        let mut d = 0;
        while f.deg() >= 2 * (d + 1) {
            d += 1;
            h = h.frobenius(&f);
            let g = h.sub(&x).gcd(&f);
            if !g.is_one() {
                f = f.div_rem(&g).0;
                h = h.rem(&f);
                out.push((d, g));
            }
        }
        if f.deg() > 0 {
            out.push((f.deg(), f));
        }
        out
    }

    /// Splits a monic squarefree product of degree-`d` irreducibles into its
    /// factors, using a deterministic random stream.
    pub fn equal_degree(&self, d: usize) -> Vec<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.p ^ ((d as u64) << 48));
        let mut pending = vec![self.monic()];
        let mut done = Vec::new();
        while let Some(f) = pending.pop() {
            if f.deg() <= d {
                done.push(f);
                continue;
            }
            loop {
                let g = self.splitting_candidate(&f, d, &mut rng);
                let g = g.gcd(&f);
                if !g.is_one() && g.deg() < f.deg() {
                    let other = f.div_rem(&g).0;
                    pending.push(g);
                    pending.push(other.monic());
                    break;
                }
            }
        }
        done.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));
        done
    }

    fn splitting_candidate(&self, f: &Self, d: usize, rng: &mut ChaCha8Rng) -> Self {
        let p = self.p;
        let n = f.deg();
        let a = Self::new(p, (0..n).map(|_| rng.next_u64() % p).collect());
        if p == 2 {
            // trace map a + a^2 + … + a^{2^{kd-1}}, k = 1 for F_{2^d}
            let mut term = a.rem(f);
            let mut trace = term.clone();
            for _ in 1..d {
                term = term.mul(&term).rem(f);
                trace = trace.add(&term);
            }
            trace
        } else {
            let exp = (BigUint::from(p).pow(d as u32) - 1u8) >> 1;
            a.pow_mod(&exp, f).sub(&Self::one(p))
        }
    }

    /// Monic irreducible factors of a squarefree polynomial, sorted by
    /// degree then coefficients.
    pub fn factor_squarefree(&self) -> Vec<Self> {
        let mut out = Vec::new();
        for (d, g) in self.distinct_degree() {
            if g.deg() == d {
                out.push(g);
            } else {
                out.extend(g.equal_degree(d));
            }
        }
        out.sort_by(|a, b| (a.deg(), &a.coeffs).cmp(&(b.deg(), &b.coeffs)));
        out
    }

    /// All roots in `[0, p)`, ascending, via `gcd(f, x^p − x)`.
    pub fn roots(&self) -> Vec<u64> {
        if self.is_zero() {
            return Vec::new();
        }
        let f = self.monic();
        if f.deg() == 0 {
            return Vec::new();
        }
        let x = Self::x(self.p);
        let g = x.frobenius(&f).sub(&x).gcd(&f);
        if g.deg() == 0 {
            return Vec::new();
        }
        let mut roots: Vec<u64> = g
            .equal_degree(1)
            .into_iter()
            .map(|lin| (self.p - lin.c(0)) % self.p)
            .collect();
        roots.sort_unstable();
        roots
    }

    /// Number of distinct roots, `deg gcd(f, x^p − x)`.
    pub fn root_count(&self) -> usize {
        let f = self.monic();
        if f.deg() == 0 {
            return 0;
        }
        let x = Self::x(self.p);
        x.frobenius(&f).sub(&x).gcd(&f).deg()
    }
}
