//! Exact arithmetic in `Q` and `Q(√D)`.

use alloc::format;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::invalid;
use crate::graph::GraphElement;
use crate::poly::IntPolynomial;
use crate::Result;

/// `a + b·√D` with rational `a, b` and a squarefree integer radicand `D`.
///
/// Rational numbers carry `b = 0` and radicand `0`. Binary operations accept
/// a rational operand with any field, but mixing two different irrational
/// radicands is a logic error and panics.
///
/// The ordering is lexicographic on `(a, b)`; it is a fixed canonical total
/// order, not the order of the real embedding.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadraticNumber {
    rational: BigRational,
    irrational: BigRational,
    radicand: i64,
}

fn is_squarefree(d: i64) -> bool {
    let n = d.unsigned_abs();
    let mut k = 2u64;
    while k * k <= n {
        if n.is_multiple_of(k * k) {
            return false;
        }
        k += 1;
    }
    true
}

impl QuadraticNumber {
    /// `a + b√D`. `D` must be squarefree and different from `0` and `1`
    /// unless `b = 0`.
    pub fn new(a: BigRational, b: BigRational, radicand: i64) -> Result<Self> {
        if b.is_zero() {
            return Ok(Self::rational(a));
        }
        if radicand == 0 || radicand == 1 || !is_squarefree(radicand) {
            return Err(invalid!(
                "radicand {radicand} is not a squarefree non-square"
            ));
        }
        Ok(QuadraticNumber {
            rational: a,
            irrational: b,
            radicand,
        })
    }

    pub fn rational(a: BigRational) -> Self {
        QuadraticNumber {
            rational: a,
            irrational: BigRational::zero(),
            radicand: 0,
        }
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `√D` for squarefree `D ∉ {0, 1}`.
    pub fn sqrt(radicand: i64) -> Result<Self> {
        Self::new(BigRational::zero(), BigRational::one(), radicand)
    }

    pub fn real_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.irrational
    }

    /// `0` for rational numbers.
    pub fn radicand(&self) -> i64 {
        self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.irrational.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.irrational.is_zero()
    }

    fn normalized(rational: BigRational, irrational: BigRational, radicand: i64) -> Self {
        if irrational.is_zero() {
            Self::rational(rational)
        } else {
            QuadraticNumber {
                rational,
                irrational,
                radicand,
            }
        }
    }

    fn common_radicand(&self, other: &Self) -> i64 {
        match (self.radicand, other.radicand) {
            (0, d) | (d, 0) => d,
            (d, e) if d == e => d,
            (d, e) => panic!("cannot combine elements of Q(√{d}) and Q(√{e})"),
        }
    }

    /// Field norm `a² − D·b²`.
    pub fn norm(&self) -> BigRational {
        &self.rational * &self.rational
            - &self.irrational * &self.irrational * BigRational::from_integer(self.radicand.into())
    }

    pub fn conjugate(&self) -> Self {
        Self::normalized(
            self.rational.clone(),
            -self.irrational.clone(),
            self.radicand,
        )
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(invalid!("inverse of zero"));
        }
        let n = self.norm();
        let c = self.conjugate();
        Ok(Self::normalized(
            c.rational / &n,
            c.irrational / &n,
            self.radicand,
        ))
    }

    /// Primitive integer minimal polynomial: degree 1 for rationals,
    /// degree 2 otherwise.
    pub fn minimal_polynomial(&self) -> IntPolynomial {
        if self.is_rational() {
            // denom·x − numer
            let r = &self.rational;
            return IntPolynomial::new(alloc::vec![-r.numer().clone(), r.denom().clone()])
                .primitive_part();
        }
        // x² − 2a·x + (a² − D b²)
        let two = BigRational::from_integer(BigInt::from(2));
        let coeffs = [self.norm(), -(two * &self.rational), BigRational::one()];
        let lcm = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        IntPolynomial::new(
            coeffs
                .iter()
                .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
                .collect(),
        )
        .primitive_part()
    }

    /// `P(self)` evaluated exactly.
    pub fn evaluate(poly: &IntPolynomial, x: &Self) -> Self {
        poly.evaluate_with(x, |c| Self::rational(BigRational::from_integer(c.clone())))
    }
}

impl Add for QuadraticNumber {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let d = self.common_radicand(&rhs);
        Self::normalized(
            self.rational + rhs.rational,
            self.irrational + rhs.irrational,
            d,
        )
    }
}

impl Sub for QuadraticNumber {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for QuadraticNumber {
    type Output = Self;
    fn neg(self) -> Self {
        Self::normalized(-self.rational, -self.irrational, self.radicand)
    }
}

impl Mul for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn mul(self, rhs: Self) -> QuadraticNumber {
        let d = self.common_radicand(rhs);
        let dd = BigRational::from_integer(BigInt::from(d));
        QuadraticNumber::normalized(
            &self.rational * &rhs.rational + &self.irrational * &rhs.irrational * dd,
            &self.rational * &rhs.irrational + &self.irrational * &rhs.rational,
            d,
        )
    }
}

impl Mul for QuadraticNumber {
    type Output = QuadraticNumber;
    fn mul(self, rhs: Self) -> QuadraticNumber {
        &self * &rhs
    }
}

impl Div for &QuadraticNumber {
    type Output = Result<QuadraticNumber>;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Result<QuadraticNumber> {
        Ok(self * &rhs.inverse()?)
    }
}

impl PartialOrd for QuadraticNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadraticNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.rational, &self.irrational, self.radicand).cmp(&(
            &other.rational,
            &other.irrational,
            other.radicand,
        ))
    }
}

impl fmt::Display for QuadraticNumber {
    /// `a`, `b√D`, or `a+b√D` with rationals printed as `n/d`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.rational);
        }
        let surd = format!("√{}", self.radicand);
        if !self.rational.is_zero() {
            write!(f, "{}", self.rational)?;
            f.write_str(if self.irrational.is_negative() {
                "-"
            } else {
                "+"
            })?;
        } else if self.irrational.is_negative() {
            f.write_str("-")?;
        }
        let mag = self.irrational.abs();
        if mag.is_one() {
            f.write_str(&surd)
        } else {
            write!(f, "{mag}{surd}")
        }
    }
}

impl fmt::Debug for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl GraphElement for QuadraticNumber {
    fn is_product(a: &Self, b: &Self, target: &Self) -> bool {
        &(a * b) == target
    }

    fn products_agree(lhs: &[&Self], rhs: &[&Self]) -> bool {
        let prod = |xs: &[&QuadraticNumber]| {
            xs.iter()
                .fold(QuadraticNumber::integer(1), |acc, &x| &acc * x)
        };
        prod(lhs) == prod(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn sqrt2_arithmetic() {
        let s = QuadraticNumber::sqrt(2).unwrap();
        assert_eq!(&s * &s, QuadraticNumber::integer(2));
        let x = s.clone() + QuadraticNumber::integer(1);
        let inv = x.inverse().unwrap();
        assert_eq!(&x * &inv, QuadraticNumber::integer(1));
        assert_eq!(x.norm(), q(-1, 1));
        assert_eq!(inv.to_string(), "-1+√2");
    }

    #[test]
    fn minimal_polynomials() {
        let s = QuadraticNumber::sqrt(2).unwrap();
        assert_eq!(
            s.minimal_polynomial(),
            IntPolynomial::from_i64s(&[-2, 0, 1])
        );
        let half = QuadraticNumber::rational(q(1, 2));
        assert_eq!(
            half.minimal_polynomial(),
            IntPolynomial::from_i64s(&[-1, 2])
        );
        let x = QuadraticNumber::new(q(1, 2), q(1, 2), 5).unwrap(); // golden ratio
        assert_eq!(
            x.minimal_polynomial(),
            IntPolynomial::from_i64s(&[-1, -1, 1])
        );
        assert!(QuadraticNumber::evaluate(&x.minimal_polynomial(), &x).is_zero());
    }

    #[test]
    fn rejects_bad_radicands() {
        assert!(QuadraticNumber::sqrt(4).is_err());
        assert!(QuadraticNumber::sqrt(1).is_err());
        assert!(QuadraticNumber::sqrt(-1).is_ok());
        assert!(QuadraticNumber::new(q(1, 1), q(0, 1), 8).is_ok());
    }

    #[test]
    #[should_panic(expected = "cannot combine")]
    fn mixing_fields_panics() {
        let _ = QuadraticNumber::sqrt(2).unwrap() + QuadraticNumber::sqrt(3).unwrap();
    }
}
