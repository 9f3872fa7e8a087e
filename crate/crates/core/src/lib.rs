//! Arithmetic progressions inside product sets `B.B = {b·b' : b, b' ∈ B}`.
//!
//! The crate is `no_std` (with `alloc`) and collects the constructive pieces
//! behind the `O(n log n)` bound for integer sets and the `O(n^{1+ε})` bound
//! for complex sets:
//!
//! * [`arith`], [`sieve`], [`logint`]: integer helpers (`ord_p`, `ω(n, k)`,
//!   factorization, prime sieves, the offset logarithmic integral).
//! * [`progression`] and [`bounds`]: normalized progressions, product sets,
//!   brute-force progression search and the explicit bound formulas.
//! * [`elimination`]: the Erdős elimination process, its inequality, the
//!   two-branch dichotomy and the unique-divisor prime selection.
//! * [`graph`]: containment graphs, even-cycle search and the forest check.
//! * [`poly`], [`chebotarev`], [`quadratic`], [`theorem2`]: integer
//!   polynomials, factorization modulo primes, splitting statistics and the
//!   cycle-to-polynomial analysis over rational and quadratic fields.

#![no_std]

extern crate alloc;

pub mod arith;
pub mod bounds;
pub mod chebotarev;
pub mod elimination;
mod error;
pub mod graph;
pub mod logint;
pub mod poly;
pub mod progression;
pub mod quadratic;
pub mod sieve;
pub mod theorem2;

pub use error::{Error, Result};
