//! Resultants via the Sylvester matrix and fraction-free (Bareiss)
//! elimination.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPolynomial;
use crate::error::invalid;
use crate::Result;

pub(super) fn resultant(f: &IntPolynomial, g: &IntPolynomial) -> Result<BigInt> {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return Err(invalid!("resultant with the zero polynomial"));
    };
    if m == 0 && n == 0 {
        return Ok(BigInt::one());
    }
    Ok(determinant(sylvester(f, g, m, n)))
}

pub(super) fn discriminant(f: &IntPolynomial) -> Result<BigInt> {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(invalid!("discriminant needs degree at least 1")),
    };
    if n == 1 {
        return Ok(BigInt::one());
    }
    let res = resultant(f, &f.derivative())?;
    let lead = f.leading().expect("nonzero");
    let value = res / lead;
    Ok(if (n * (n - 1) / 2) % 2 == 1 {
        -value
    } else {
        value
    })
}

/// `(m + n) × (m + n)` Sylvester matrix, rows of `f` then rows of `g`,
/// coefficients in descending degree.
fn sylvester(f: &IntPolynomial, g: &IntPolynomial, m: usize, n: usize) -> Vec<Vec<BigInt>> {
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (poly, deg, copies) in [(f, m, n), (g, n, m)] {
        for shift in 0..copies {
            let mut row = vec![BigInt::zero(); size];
            for k in 0..=deg {
                row[shift + k] = poly.coeff(deg - k);
            }
            rows.push(row);
        }
    }
    rows
}

/// Bareiss elimination with row pivoting; every division is exact.
fn determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}
