//! Offset logarithmic integral `Li(x) = ∫₂ˣ dt / ln t`.

use crate::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
/// `li(2)`, the offset between the principal value `li` and `Li`.
const LI_2: f64 = 1.045_163_780_117_493;

/// `Li(x) = li(x) − li(2)`. Defined for `x ≥ 2`, with `Li(2) = 0`.
pub fn log_integral(x: f64) -> Result<f64> {
    if x.is_nan() || x < 2.0 {
        return Err(Error::Domain(alloc::format!(
            "log_integral: x = {x} is below the lower limit 2"
        )));
    }
    if x == 2.0 {
        return Ok(0.0);
    }
    Ok(li(x) - LI_2)
}

/// Ramanujan's series for the principal-value `li(x)`, `x > 1`.
fn li(x: f64) -> f64 {
    let ln_x = libm::log(x);
    let mut sum = 0.0;
    let mut inner = 0.0; // Σ_{k ≤ (n-1)/2} 1/(2k+1)
    let mut term = 1.0; // (ln x)^n / (n! 2^{n-1}) with alternating sign
    let mut sign = 1.0;
    for n in 1..400u32 {
        term *= ln_x / n as f64;
        if n > 1 {
            term /= 2.0;
        }
        if n % 2 == 1 {
            inner += 1.0 / n as f64;
        }
        let contribution = sign * term * inner;
        sum += contribution;
        sign = -sign;
        if libm::fabs(contribution) < 1e-17 * libm::fabs(sum) && n > 2 {
            break;
        }
    }
    EULER_GAMMA + libm::log(ln_x) + libm::sqrt(x) * sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_and_domain() {
        assert_eq!(log_integral(2.0), Ok(0.0));
        assert!(log_integral(1.5).is_err());
        assert!(log_integral(f64::NAN).is_err());
    }

    #[test]
    fn known_values() {
        // li(10) = 6.1655995047872979375
        let li10 = 6.165_599_504_787_298 - LI_2;
        assert!((log_integral(10.0).unwrap() - li10).abs() < 1e-12);
        // li(10^6) = 78627.549159462181919
        let li6 = 78_627.549_159_462_18 - LI_2;
        assert!(((log_integral(1e6).unwrap() - li6) / li6).abs() < 1e-12);
    }
}
