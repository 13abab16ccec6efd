//! Prime tables and the lcm sequence d_n = lcm(1, ..., n).

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::product::product;

/// Default upper bound on the sieve limit.
pub const DEFAULT_SIEVE_CAP: u64 = 200_000_000;

/// All primes up to `limit`, in increasing order.
#[derive(Clone, Debug)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u32>,
}

/// Sieve of Eratosthenes up to `limit` with the default cap.
pub fn sieve(limit: u64) -> Result<PrimeTable> {
    sieve_capped(limit, DEFAULT_SIEVE_CAP)
}

pub fn sieve_capped(limit: u64, cap: u64) -> Result<PrimeTable> {
    if limit < 2 {
        return Err(Error::Domain(format!("sieve limit must be at least 2, got {limit}")));
    }
    if limit > cap || limit > u64::from(u32::MAX) {
        return Err(Error::ResourceLimit {
            what: "sieve limit",
            requested: limit,
            cap: cap.min(u64::from(u32::MAX)),
        });
    }
    Ok(PrimeTable { limit, primes: odd_sieve(limit) })
}

/// Bit sieve over odd numbers; bit i stands for 2i + 1.
fn odd_sieve(limit: u64) -> Vec<u32> {
    let n_odd = (limit as usize).div_ceil(2);
    let mut composite = vec![0u64; n_odd.div_ceil(64)];
    let mut i = 1usize;
    loop {
        let p = 2 * i + 1;
        if p * p > limit as usize {
            break;
        }
        if composite[i / 64] >> (i % 64) & 1 == 0 {
            let mut j = (p * p) / 2;
            while j < n_odd {
                composite[j / 64] |= 1 << (j % 64);
                j += p;
            }
        }
        i += 1;
    }
    let estimate = (limit as f64 / (limit as f64).ln() * 1.2) as usize + 16;
    let mut primes = Vec::with_capacity(estimate);
    primes.push(2);
    for (w, &word) in composite.iter().enumerate() {
        let mut free = !word;
        while free != 0 {
            let bit = free.trailing_zeros() as usize;
            free &= free - 1;
            let idx = w * 64 + bit;
            if idx == 0 || idx >= n_odd {
                continue;
            }
            primes.push((2 * idx + 1) as u32);
        }
    }
    primes
}

/// Rough limit needed to contain the n-th prime (Rosser-style estimate).
pub fn nth_prime_limit_estimate(n: u64) -> u64 {
    if n < 6 {
        return 13;
    }
    let x = n as f64;
    (x * (x.ln() + x.ln().ln())).ceil() as u64
}

/// log d_n alongside the two quantities it is compared against.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LogLcm {
    pub n: u64,
    /// sum over p <= n of floor(log_p n) * ln p.
    pub log_lcm: f64,
    pub pi_n: u64,
    /// pi(n) * ln n, the upper bound from replacing each exponent by log n / log p.
    pub pi_log_n: f64,
    /// (ln n)^2, the bound valid when pi(n) <= ln n.
    pub log_squared_n: f64,
}

/// Largest power of `p` not exceeding `n`, by repeated multiplication.
fn max_prime_power(p: u64, n: u64) -> (u64, u32) {
    let mut pk = p;
    let mut k = 1;
    while let Some(next) = pk.checked_mul(p) {
        if next > n {
            break;
        }
        pk = next;
        k += 1;
    }
    (pk, k)
}

impl PrimeTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u32] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// Primes `p <= n`; the caller must have checked `n <= limit`.
    fn primes_upto(&self, n: u64) -> &[u32] {
        let end = self.primes.partition_point(|&p| u64::from(p) <= n);
        &self.primes[..end]
    }

    fn check_range(&self, x: u64) -> Result<()> {
        if x > self.limit {
            return Err(Error::Range(format!(
                "{x} exceeds the sieve limit {}",
                self.limit
            )));
        }
        Ok(())
    }

    pub fn is_prime(&self, n: u64) -> Result<bool> {
        self.check_range(n)?;
        Ok(u32::try_from(n).is_ok_and(|n| self.primes.binary_search(&n).is_ok()))
    }

    /// pi(x), the number of primes at most `x`.
    pub fn prime_count(&self, x: u64) -> Result<u64> {
        self.check_range(x)?;
        Ok(self.primes_upto(x).len() as u64)
    }

    /// pi(x) for a real argument.
    pub fn prime_count_real(&self, x: f64) -> Result<u64> {
        if x.is_nan() {
            return Err(Error::Domain("pi(NaN)".into()));
        }
        if x < 2.0 {
            return Ok(0);
        }
        if x > self.limit as f64 {
            return Err(Error::Range(format!("{x} exceeds the sieve limit {}", self.limit)));
        }
        self.prime_count(x.floor() as u64)
    }

    /// p_n, 1-indexed.
    pub fn nth_prime(&self, n: u64) -> Result<u64> {
        if n == 0 {
            return Err(Error::Domain("primes are indexed from 1".into()));
        }
        match self.primes.get((n - 1) as usize) {
            Some(&p) => Ok(u64::from(p)),
            None => Err(Error::Range(format!(
                "table to {} holds {} primes; p_{n} needs a limit of about {}",
                self.limit,
                self.primes.len(),
                nth_prime_limit_estimate(n)
            ))),
        }
    }

    /// Whether some prime lies in `(lo, hi]`. `None` when `hi` is beyond the table.
    pub fn has_prime_in(&self, lo: u64, hi: u64) -> Option<bool> {
        if hi > self.limit {
            return None;
        }
        if hi <= lo {
            return Some(false);
        }
        let below = self.primes.partition_point(|&p| u64::from(p) <= lo);
        Some(self.primes.get(below).is_some_and(|&p| u64::from(p) <= hi))
    }

    /// d_n = lcm(1, ..., n) as the product of the maximal prime powers p^k <= n.
    pub fn lcm_to(&self, n: u64) -> Result<BigUint> {
        if n == 0 {
            return Err(Error::Domain("lcm_to needs n >= 1".into()));
        }
        self.check_range(n)?;
        Ok(product(
            self.primes_upto(n)
                .iter()
                .map(|&p| BigUint::from(max_prime_power(u64::from(p), n).0)),
        ))
    }

    /// log d_n without forming d_n.
    pub fn log_lcm_to(&self, n: u64) -> Result<LogLcm> {
        if n == 0 {
            return Err(Error::Domain("log_lcm_to needs n >= 1".into()));
        }
        self.check_range(n)?;
        let ps = self.primes_upto(n);
        let log_lcm = ps
            .iter()
            .map(|&p| {
                let (_, k) = max_prime_power(u64::from(p), n);
                f64::from(k) * f64::from(p).ln()
            })
            .sum();
        let ln_n = (n as f64).ln();
        Ok(LogLcm {
            n,
            log_lcm,
            pi_n: ps.len() as u64,
            pi_log_n: ps.len() as f64 * ln_n,
            log_squared_n: ln_n * ln_n,
        })
    }

    /// log d_n for every n in `0..=n_max` (entry 0 is 0), accumulated over
    /// prime powers. Much cheaper than calling [`Self::log_lcm_to`] per n.
    pub fn log_lcm_table(&self, n_max: u64) -> Result<Vec<f64>> {
        self.check_range(n_max)?;
        let len = n_max as usize + 1;
        let mut jump = vec![0f64; len];
        for &p in self.primes_upto(n_max) {
            let ln_p = f64::from(p).ln();
            let mut pk = u64::from(p);
            while pk <= n_max {
                jump[pk as usize] = ln_p;
                match pk.checked_mul(u64::from(p)) {
                    Some(next) => pk = next,
                    None => break,
                }
            }
        }
        let mut acc = 0f64;
        Ok(jump
            .into_iter()
            .map(|j| {
                acc += j;
                acc
            })
            .collect())
    }
}
