//! The girth dichotomy for `A = r + [N]` inside `B.B` over `Q` or a
//! quadratic field.
//!
//! With `k = ⌊1/ε⌋`, either the containment graph has no even cycle of
//! length at most `2k` and its edge count is compared with `n^{1+1/k}`, or a
//! cycle exists and yields an integer polynomial of degree below `k` that
//! vanishes at `r`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use crate::error::invalid;
use crate::graph::{bondy_simonovits_report, build_graph, EdgeBoundReport, EvenCycle};
use crate::poly::{coefficient_bound, cycle_to_polynomial, IntPolynomial};
use crate::quadratic::QuadraticNumber;
use crate::Result;

/// What the cycle branch extracted.
#[derive(Debug, Clone, PartialEq)]
pub struct CycleBranch {
    pub cycle: EvenCycle,
    /// Progression positions of the cycle's edges in cycle order.
    pub indices: Vec<u64>,
    pub polynomial: IntPolynomial,
    /// The polynomial evaluates to exactly zero at `r`.
    pub vanishes: bool,
    pub degree: usize,
    pub height: BigUint,
    /// Largest of the per-coefficient bounds `2·C(ℓ,l)·N^{ℓ−l}` for a
    /// cycle of length `2ℓ`.
    pub height_bound: BigUint,
    /// Every coefficient is within its own bound.
    pub within_bounds: bool,
    /// Minimal polynomial of `r` and whether it divides the cycle polynomial.
    pub minimal_polynomial: IntPolynomial,
    pub minimal_divides: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Theorem2Branch {
    /// No even cycle of length `≤ 2k`.
    EdgeBound(EdgeBoundReport),
    Cycle(CycleBranch),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Theorem2Report {
    pub k: u32,
    pub len: u64,
    pub base_size: usize,
    pub vertices: usize,
    pub edges: usize,
    pub branch: Theorem2Branch,
}

/// `r + j` for `j` in `[0, len)`.
pub fn shifted_progression(r: &QuadraticNumber, len: u64) -> Vec<QuadraticNumber> {
    (0..len)
        .map(|j| r.clone() + QuadraticNumber::integer(j as i64))
        .collect()
}

pub fn theorem2_analyze(
    r: &QuadraticNumber,
    len: u64,
    base: &[QuadraticNumber],
    eps: f64,
) -> Result<Theorem2Report> {
    if !(eps > 0.0 && eps <= 0.5) {
        return Err(invalid!("eps must lie in (0, 1/2], got {eps}"));
    }
    if len == 0 {
        return Err(invalid!("progression length must be positive"));
    }
    let k = libm::floor(1.0 / eps) as u32;
    let a = shifted_progression(r, len);
    let g = build_graph(&a, base)?;
    let header = |branch| Theorem2Report {
        k,
        len,
        base_size: g.base().len(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        branch,
    };
    let Some(cycle) = g.graph().shortest_even_cycle(2 * k as usize)? else {
        let report = bondy_simonovits_report(g.vertex_count(), k, g.edge_count())?;
        return Ok(header(Theorem2Branch::EdgeBound(report)));
    };
    // distinct elements of A never share an endpoint pair
    debug_assert!(!cycle.is_parallel_pair());
    let indices: Vec<u64> = cycle.edges.iter().map(|&e| e as u64).collect();
    let polynomial = cycle_to_polynomial(&indices)?;
    let half = (indices.len() / 2) as u32;
    let within_bounds = polynomial
        .coeffs()
        .iter()
        .enumerate()
        .all(|(l, c)| c.magnitude() <= &coefficient_bound(half, l as u32, len));
    let height_bound = (0..half)
        .map(|l| coefficient_bound(half, l, len))
        .max()
        .unwrap_or_default();
    let minimal_polynomial = r.minimal_polynomial();
    let branch = CycleBranch {
        vanishes: QuadraticNumber::evaluate(&polynomial, r).is_zero(),
        degree: polynomial.degree().expect("nonzero"),
        height: polynomial.height()?,
        height_bound,
        within_bounds,
        minimal_divides: polynomial.div_exact(&minimal_polynomial).is_some(),
        minimal_polynomial,
        polynomial,
        indices,
        cycle,
    };
    Ok(header(Theorem2Branch::Cycle(branch)))
}

fn subsets(n: u64, k: usize, out: &mut Vec<Vec<u64>>) {
    let mut cur: Vec<u64> = (0..k as u64).collect();
    if k as u64 > n {
        return;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - (k - i) as u64) else {
            return;
        };
        cur[i] += 1;
        for t in i + 1..k {
            cur[t] = cur[t - 1] + 1;
        }
    }
}

/// Disjoint `ℓ`-subsets `E`, `O` of `[0, len)` with
/// `∏_{j∈E} (r + j) = ∏_{j∈O} (r + j)`, for the smallest `2 ≤ ℓ ≤ k` that
/// admits one, returned interleaved as `e₀, o₀, e₁, o₁, …`.
pub fn vanishing_indices(r: &QuadraticNumber, len: u64, k: usize) -> Option<Vec<u64>> {
    let a = shifted_progression(r, len);
    for ell in 2..=k {
        let mut all = Vec::new();
        subsets(len, ell, &mut all);
        let mut seen: BTreeMap<QuadraticNumber, Vec<usize>> = BTreeMap::new();
        for (id, s) in all.iter().enumerate() {
            let prod = s
                .iter()
                .fold(QuadraticNumber::integer(1), |acc, &j| &acc * &a[j as usize]);
            let bucket = seen.entry(prod).or_default();
            if let Some(&other) = bucket
                .iter()
                .find(|&&o| all[o].iter().all(|j| !s.contains(j)))
            {
                let (e, o) = (&all[other], s);
                return Some(e.iter().zip(o).flat_map(|(&x, &y)| [x, y]).collect());
            }
            bucket.push(id);
        }
    }
    None
}

/// A set `B` with `r + [len] ⊆ B.B` whose containment graph carries the
/// cycle described by `indices` (as produced by [`vanishing_indices`]).
///
/// The cycle vertices are `b₀ = t`, `b_{i+1} = (r + j_i)/b_i`; the scale `t`
/// is chosen so that the canonical order puts every even-position vertex on
/// the same side, which keeps the cycle intact in the bipartite graph. The
/// remaining progression elements enter as `1·(r + j)`.
pub fn cycle_instance(
    r: &QuadraticNumber,
    len: u64,
    indices: &[u64],
) -> Result<Vec<QuadraticNumber>> {
    let poly = cycle_to_polynomial(indices)?;
    if indices.iter().any(|&j| j >= len) {
        return Err(invalid!("cycle index outside [0, {len})"));
    }
    if !QuadraticNumber::evaluate(&poly, r).is_zero() {
        return Err(invalid!(
            "indices {indices:?} do not give a relation at {r}"
        ));
    }
    let a = shifted_progression(r, len);
    for t in scales() {
        let mut chain = Vec::with_capacity(indices.len());
        chain.push(QuadraticNumber::rational(t));
        for &j in &indices[..indices.len() - 1] {
            let prev = chain.last().expect("nonempty");
            chain.push((&a[j as usize] / prev)?);
        }
        if !alternates(&chain) {
            continue;
        }
        let mut base = chain;
        base.push(QuadraticNumber::integer(1));
        base.extend(
            (0..len)
                .filter(|j| !indices.contains(j))
                .map(|j| a[j as usize].clone()),
        );
        base.sort();
        base.dedup();
        // another factorization of a cycle element may win the canonical
        // pair and break the cycle, so confirm on the built graph
        let g = build_graph(&a, &base)?;
        if g.graph().shortest_even_cycle(indices.len())?.is_some() {
            return Ok(base);
        }
    }
    Err(invalid!("no scaling keeps the cycle bipartite for {r}"))
}

/// Candidate values for the first cycle vertex: 1, then ±q^{±e} for a few
/// primes q, which make accidental coincidences with other products unlikely.
fn scales() -> Vec<BigRational> {
    let mut out = alloc::vec![BigRational::one()];
    for (q, e) in [(2u32, 40u32), (3, 25), (5, 17), (7, 14)] {
        let big = BigRational::from_integer(BigInt::from(q).pow(e));
        for s in [big.recip(), big.clone()] {
            out.push(-s.clone());
            out.push(s);
        }
    }
    out
}

/// Consecutive chain elements are distinct and the even positions are all
/// below, or all above, their neighbours.
fn alternates(chain: &[QuadraticNumber]) -> bool {
    let n = chain.len();
    let mut sorted = chain.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != n {
        return false;
    }
    let even_low = |i: usize| chain[i] < chain[(i + 1) % n] && chain[i] < chain[(i + n - 1) % n];
    let even_high = |i: usize| chain[i] > chain[(i + 1) % n] && chain[i] > chain[(i + n - 1) % n];
    (0..n).step_by(2).all(even_low) || (0..n).step_by(2).all(even_high)
}

/// Convenience for tests and the CLI: `a/b` as a rational quadratic number.
pub fn rational(a: i64, b: i64) -> Result<QuadraticNumber> {
    if b == 0 {
        return Err(invalid!("zero denominator"));
    }
    Ok(QuadraticNumber::rational(BigRational::new(
        a.into(),
        b.into(),
    )))
}
