//! Command-line value formats.

use anyhow::{anyhow, bail, Context};
use num_bigint::BigInt;
use prodap_core::poly::IntPolynomial;
use prodap_core::quadratic::QuadraticNumber;

/// `1,2,3`; whitespace around entries is ignored.
pub fn u64_list(s: &str) -> anyhow::Result<Vec<u64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .with_context(|| format!("bad integer {t:?}"))
        })
        .collect()
}

/// Ascending coefficients, `1,0,1` for `x² + 1`.
pub fn polynomial(s: &str) -> anyhow::Result<IntPolynomial> {
    let coeffs = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<BigInt>()
                .with_context(|| format!("bad coefficient {t:?}"))
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    let p = IntPolynomial::new(coeffs);
    if p.is_zero() {
        bail!("zero polynomial");
    }
    Ok(p)
}

/// `a` or `a/b`.
pub fn rational(s: &str) -> anyhow::Result<(i64, i64)> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse()?, d.trim().parse()?),
        None => (s.trim().parse()?, 1),
    };
    if d == 0 {
        bail!("zero denominator in {s:?}");
    }
    Ok((n, d))
}

/// `q + √D` from an optional rational part and an optional radicand.
pub fn quadratic(r: Option<&str>, radicand: Option<i64>) -> anyhow::Result<QuadraticNumber> {
    let (n, d) = r.map(rational).transpose()?.unwrap_or((0, 1));
    let q = prodap_core::theorem2::rational(n, d).map_err(|e| anyhow!(e))?;
    Ok(match radicand {
        None => q,
        Some(rad) => q + QuadraticNumber::sqrt(rad).map_err(|e| anyhow!(e))?,
    })
}
