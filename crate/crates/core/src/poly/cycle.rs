//! Polynomials arising from cycles of a containment graph and from norms.

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use super::IntPolynomial;
use crate::error::invalid;
use crate::Result;

/// `∏_{i even} (r + j(i)) − ∏_{i odd} (r + j(i))` as a polynomial in `r`.
///
/// `indices` lists the progression positions of the `2k` edges of a cycle in
/// cycle order. The `r^k` terms cancel, so the result has degree at most
/// `k − 1`; it is nonzero because distinct indices give distinct root
/// multisets on the two sides.
pub fn cycle_to_polynomial(indices: &[u64]) -> Result<IntPolynomial> {
    if indices.len() < 4 || !indices.len().is_multiple_of(2) {
        return Err(invalid!(
            "cycle_to_polynomial: need 2k ≥ 4 indices, got {}",
            indices.len()
        ));
    }
    let mut sorted = indices.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(invalid!("cycle_to_polynomial: indices must be distinct"));
    }
    let side = |parity: usize| {
        indices
            .iter()
            .skip(parity)
            .step_by(2)
            .fold(IntPolynomial::constant(BigInt::one()), |acc, &j| {
                &acc * &IntPolynomial::linear(BigInt::from(j))
            })
    };
    let poly = side(0) - side(1);
    assert!(!poly.is_zero(), "distinct indices cannot cancel completely");
    Ok(poly)
}

/// `2·C(k, l)·N^{k−l}`, the bound on the coefficient of `r^l` in
/// [`cycle_to_polynomial`] when every index is below `N`.
pub fn coefficient_bound(k: u32, l: u32, n: u64) -> BigUint {
    if l > k {
        return BigUint::ZERO;
    }
    let binom = (0..l).fold(BigUint::one(), |acc, i| acc * (k - i) / (i + 1));
    BigUint::from(2u8) * binom * BigUint::from(n).pow(k - l)
}

/// `i ↦ (−1)^k·P(−i)·m^k` for monic `P` of degree `k`: the norm of
/// `m·r + m·i` when `r` is a root of `P`.
pub fn norm_polynomial(p: &IntPolynomial, m: u64) -> Result<IntPolynomial> {
    let k = match p.degree() {
        Some(k) if k >= 1 => k,
        _ => return Err(invalid!("norm_polynomial: degree must be at least 1")),
    };
    if !p.is_monic() {
        return Err(invalid!("norm_polynomial: {p} is not monic"));
    }
    if m == 0 {
        return Err(invalid!("norm_polynomial: m must be positive"));
    }
    let mut factor = BigInt::from(m).pow(k as u32);
    if k % 2 == 1 {
        factor = -factor;
    }
    Ok(p.reflect().scale(&factor))
}
