//! Integer polynomials and their reductions modulo primes.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::invalid;
use crate::Result;

mod cycle;
mod irreducible;
mod modp;
mod resultant;

pub use cycle::{coefficient_bound, cycle_to_polynomial, norm_polynomial};
pub use irreducible::{irreducibility, Irreducibility};
pub use modp::PolyModP;

/// Polynomial with arbitrary-precision integer coefficients, stored in
/// ascending degree order without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `x + c`.
    pub fn linear(c: BigInt) -> Self {
        Self::new(vec![c, BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Largest absolute value of a coefficient.
    pub fn height(&self) -> Result<BigUint> {
        self.coeffs
            .iter()
            .map(BigInt::magnitude)
            .max()
            .cloned()
            .ok_or_else(|| invalid!("height of the zero polynomial is undefined"))
    }

    /// Horner evaluation in any ring that integers embed into.
    pub fn evaluate_with<T>(&self, x: &T, embed: impl Fn(&BigInt) -> T) -> T
    where
        T: Clone + Add<Output = T> + Mul<Output = T>,
    {
        let mut iter = self.coeffs.iter().rev();
        let Some(lead) = iter.next() else {
            return embed(&BigInt::zero());
        };
        iter.fold(embed(lead), |acc, c| acc * x.clone() + embed(c))
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.evaluate_with(x, Clone::clone)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// gcd of the coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// `x ↦ P(−x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Exact quotient over `Z`, or `None` when `divisor` does not divide.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = self.degree()?;
        if n < dd {
            return None;
        }
        let lead = divisor.leading()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - dd + 1];
        for i in (0..=n - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        rem.iter().all(Zero::is_zero).then(|| Self::new(quot))
    }

    /// Pseudo-remainder `lc(g)^{deg f − deg g + 1}·f mod g`.
    pub fn pseudo_rem(&self, g: &Self) -> Self {
        let Some(dg) = g.degree() else {
            return self.clone();
        };
        let lead = g.leading().cloned().unwrap_or_default();
        let mut rem = self.clone();
        while let Some(dr) = rem.degree() {
            if dr < dg {
                break;
            }
            let top = rem.coeffs[dr].clone();
            let mut shifted = vec![BigInt::zero(); dr - dg];
            shifted.extend(g.coeffs.iter().map(|c| c * &top));
            rem = rem.scale(&lead) - Self::new(shifted);
        }
        rem
    }

    /// Primitive gcd over `Q[x]` (positive leading coefficient).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.primitive_part()
    }

    /// Coefficients reduced modulo a prime `p`.
    pub fn reduce_mod(&self, p: u64) -> PolyModP {
        let modulus = BigInt::from(p);
        PolyModP::new(
            p,
            self.coeffs
                .iter()
                .map(|c| {
                    let r = c.mod_floor(&modulus);
                    u64::try_from(r).expect("residue below p")
                })
                .collect(),
        )
    }

    /// Resultant of two nonzero polynomials.
    pub fn resultant(&self, other: &Self) -> Result<BigInt> {
        resultant::resultant(self, other)
    }

    /// `(−1)^{n(n−1)/2} Res(P, P′) / lc(P)` for `deg P ≥ 1`.
    pub fn discriminant(&self) -> Result<BigInt> {
        resultant::discriminant(self)
    }
}

/// Discriminant of `P`; see [`IntPolynomial::discriminant`].
pub fn discriminant(p: &IntPolynomial) -> Result<BigInt> {
    p.discriminant()
}

/// Height of `P`; see [`IntPolynomial::height`].
pub fn height(p: &IntPolynomial) -> Result<BigUint> {
    p.height()
}

fn zip_coeffs(
    a: &IntPolynomial,
    b: &IntPolynomial,
    f: impl Fn(BigInt, BigInt) -> BigInt,
) -> IntPolynomial {
    let n = a.coeffs.len().max(b.coeffs.len());
    IntPolynomial::new((0..n).map(|i| f(a.coeff(i), b.coeff(i))).collect())
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: Self) -> Self {
        zip_coeffs(&self, &rhs, |x, y| x + y)
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: Self) -> Self {
        zip_coeffs(&self, &rhs, |x, y| x - y)
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> Self {
        IntPolynomial::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: Self) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: Self) -> IntPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for IntPolynomial {
    /// Descending terms in `x`, e.g. `x^2 - 2` or `-2*x - 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.sign() == Sign::Minus;
            let mag = c.magnitude();
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = mag.is_one() && i > 0;
            if !unit {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 if unit => f.write_str("x")?,
                1 => f.write_str("*x")?,
                _ if unit => write!(f, "x^{i}")?,
                _ => write!(f, "*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}
