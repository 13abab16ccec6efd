use std::env;

use zeta2::approx::DEFAULT_BIGINT_BUDGET_BITS;
use zeta2::arith::DEFAULT_DIGIT_CAP;
use zeta2::euler::DEFAULT_FACTORIAL_CAP;
use zeta2::primes::DEFAULT_SIEVE_CAP;
use zeta2::{Error, Result};

/// Resource caps, overridable through the environment.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub sieve: u64,
    pub bigint_bits: u64,
    pub digits: u32,
    pub factorial: u64,
}

fn read<T: std::str::FromStr>(name: &str, default: T) -> Result<T> {
    match env::var(name) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{name} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(default),
    }
}

impl Caps {
    pub fn from_env() -> Result<Self> {
        Ok(Caps {
            sieve: read("ZETA2_SIEVE_CAP", DEFAULT_SIEVE_CAP)?,
            bigint_bits: read("ZETA2_BIGINT_BUDGET_BITS", DEFAULT_BIGINT_BUDGET_BITS)?,
            digits: read("ZETA2_DIGIT_CAP", DEFAULT_DIGIT_CAP)?,
            factorial: read("ZETA2_FACTORIAL_CAP", DEFAULT_FACTORIAL_CAP)?,
        })
    }
}
