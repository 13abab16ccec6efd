//! Desk-scale verification toolkit for Euler-product approximations to
//! zeta(2) = pi^2/6 and the prime-counting lower bounds they imply.
//!
//! The crate is organised by subsystem:
//!
//! - [`arith`]: exact rationals and rigorous enclosures, including a
//!   Machin-formula enclosure of zeta(2).
//! - [`primes`]: the Eratosthenes sieve, pi(x), p_n and d_n = lcm(1..n).
//! - [`euler`]: exact partial Euler products p_N/q_N, their denominator
//!   bounds, tail bounds and approximation gaps.
//! - [`approx`]: certified continued fractions, convergents, empirical
//!   irrationality exponents, the Rhin-Viola exponent arithmetic and the
//!   primorial inequality.
//! - [`staircase`]: exp-towers, the per-N gates for the prime-gap
//!   arguments, the sequence simulators and staircase certificates.
//! - [`verify`]: seeded property suites used by the CLI `verify` command.

pub mod approx;
pub mod arith;
pub mod error;
pub mod euler;
pub mod primes;
mod product;
pub mod serde_dec;
pub mod staircase;
pub mod verify;

pub use error::{Error, Result};
