use std::f64::consts::E;

use serde::Serialize;

use super::fixed;
use super::tower::{tower_normalize, LogTower};
use crate::error::{Error, Result};
use crate::primes::PrimeTable;

/// Largest n for which e^n stays finite in f64.
pub const THEOREM2_MAX_N: u32 = 700;

/// One term x_n = exp(exp(e^n)) of the sequence x_{n+1} = exp((ln x_n)^e).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Theorem2Term {
    pub n: u32,
    /// ln ln x_n obtained by iterating ln ln x_{n+1} = e * ln ln x_n.
    pub loglog_iterated: f64,
    /// The closed form e^n.
    pub loglog_closed: f64,
    pub x: LogTower,
}

impl Theorem2Term {
    pub fn relative_error(&self) -> f64 {
        ((self.loglog_iterated - self.loglog_closed) / self.loglog_closed).abs()
    }
}

/// x_0, ..., x_{n_max} starting from x_0 = e^e.
pub fn theorem2_sequence(n_max: u32) -> Result<Vec<Theorem2Term>> {
    if n_max > THEOREM2_MAX_N {
        return Err(Error::Range(format!("n_max = {n_max} exceeds {THEOREM2_MAX_N}")));
    }
    let mut loglog = 1.0f64;
    let mut out = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max {
        if n > 0 {
            // ln x_{n+1} = (ln x_n)^e, so ln ln x_{n+1} = e ln ln x_n
            loglog *= E;
        }
        out.push(Theorem2Term {
            n,
            loglog_iterated: loglog,
            loglog_closed: f64::from(n).exp(),
            x: tower_normalize(2, loglog)?,
        });
    }
    Ok(out)
}

/// Indices at which the a_n recursion is compared against p_n and against
/// the extended-precision rerun.
pub const THEOREM3_CHECKPOINTS: [u64; 4] = [1_000, 10_000, 100_000, 1_000_000];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Theorem3Checkpoint {
    pub n: u64,
    pub a_n: f64,
    /// a_n from the Q32.96 fixed-point rerun.
    pub a_n_extended: f64,
    /// |a_n - a_n_extended| / a_n_extended.
    pub precision_gap: f64,
    pub p_n: Option<u64>,
    /// |a_n - p_n| / p_n.
    pub relative_diff: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Theorem3Report {
    pub n_max: u64,
    pub a_final: f64,
    /// n ln n - n < a_n <= 2 n ln n for every 2 <= n <= n_max.
    pub sandwich_holds: bool,
    pub first_sandwich_failure: Option<u64>,
    pub strictly_increasing: bool,
    /// a_{n+1} - a_n = ln a_n >= 1 at every step.
    pub increments_at_least_one: bool,
    pub checkpoints: Vec<Theorem3Checkpoint>,
}

/// Iterates a_2 = e, a_{n+1} = a_n + ln a_n up to n_max (so x_n =
/// exp(exp(a_n)) with x_2 = exp(exp(e))), checking the sandwich bounds at
/// every step. Checkpoints beyond n_max are skipped; n_max itself is always
/// reported.
pub fn theorem3_sequence(
    n_max: u64,
    table: Option<&PrimeTable>,
    checkpoints: &[u64],
) -> Result<Theorem3Report> {
    if n_max < 2 {
        return Err(Error::Domain(format!("n_max must be at least 2, got {n_max}")));
    }
    let mut wanted: Vec<u64> = checkpoints.iter().copied().filter(|&c| (2..=n_max).contains(&c)).collect();
    wanted.push(n_max);
    wanted.sort_unstable();
    wanted.dedup();

    let mut a = E;
    let mut a_ext = fixed::E;
    let mut first_failure = None;
    let mut increasing = true;
    let mut increments = true;
    let mut out = Vec::with_capacity(wanted.len());
    let mut next_cp = wanted.iter().peekable();
    for n in 2..=n_max {
        if n > 2 {
            let step = a.ln();
            let next = a + step;
            increasing &= next > a;
            increments &= step >= 1.0;
            a = next;
            a_ext = a_ext.add(a_ext.ln());
        }
        let nf = n as f64;
        let ln_n = nf.ln();
        if first_failure.is_none() && !(nf * ln_n - nf < a && a <= 2.0 * nf * ln_n) {
            first_failure = Some(n);
        }
        if next_cp.peek() == Some(&&n) {
            next_cp.next();
            let ext = a_ext.to_f64();
            let p_n = table.and_then(|t| t.nth_prime(n).ok());
            out.push(Theorem3Checkpoint {
                n,
                a_n: a,
                a_n_extended: ext,
                precision_gap: ((a - ext) / ext).abs(),
                p_n,
                relative_diff: p_n.map(|p| ((a - p as f64) / p as f64).abs()),
            });
        }
    }
    Ok(Theorem3Report {
        n_max,
        a_final: a,
        sandwich_holds: first_failure.is_none(),
        first_sandwich_failure: first_failure,
        strictly_increasing: increasing,
        increments_at_least_one: increments,
        checkpoints: out,
    })
}

/// The tower x_n = exp(exp(a_n)).
pub fn theorem3_tower(a_n: f64) -> Result<LogTower> {
    tower_normalize(2, a_n)
}
