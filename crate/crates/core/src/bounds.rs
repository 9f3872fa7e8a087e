//! Explicit bound formulas. Logarithms are natural throughout.

use num_bigint::BigUint;

use crate::error::invalid;
use crate::{Error, Result};

/// Multiplicative constant of the `N ≤ C·k·n·ln n` progression-length bound.
pub const LENGTH_BOUND_CONSTANT: f64 = 36.0;

/// Verdict on one instance of "if `d < N^k` and `r < N^k` then
/// `N ≤ 36·k·n·ln n`".
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LengthBoundVerdict {
    pub hypothesis_holds: bool,
    pub conclusion_holds: bool,
    /// `36·k·n·ln n`.
    pub bound: f64,
    /// Set when `n < 2`: `ln n ≤ 0` and the conclusion is reported false.
    pub degenerate_log: bool,
}

/// Evaluates hypothesis and conclusion of the length bound separately.
pub fn lemma1_bound_check(k: u32, n: u64, len: u64, r: u64, d: u64) -> Result<LengthBoundVerdict> {
    if k == 0 || n == 0 || len == 0 || r == 0 || d == 0 {
        return Err(invalid!("lemma1_bound_check: all inputs must be positive"));
    }
    let power = BigUint::from(len).pow(k);
    let hypothesis_holds = BigUint::from(d) < power && BigUint::from(r) < power;
    let bound = LENGTH_BOUND_CONSTANT * k as f64 * n as f64 * libm::log(n as f64);
    let degenerate_log = n < 2;
    let conclusion_holds = !degenerate_log && (len as f64) <= bound;
    Ok(LengthBoundVerdict {
        hypothesis_holds,
        conclusion_holds,
        bound,
        degenerate_log,
    })
}

/// Exponent `1 + ln ln n / √(ln n)` of the explicit `n^{1+o(1)}` bound.
pub fn remark_bound(n: u64) -> Result<f64> {
    if n < 16 {
        return Err(Error::Domain(alloc::format!(
            "remark_bound: n = {n} is below 16"
        )));
    }
    let ln_n = libm::log(n as f64);
    Ok(1.0 + libm::log(ln_n) / libm::sqrt(ln_n))
}
