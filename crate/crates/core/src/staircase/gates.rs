use num_bigint::BigUint;
use serde::Serialize;

use super::tower::{tower_normalize, LogTower};
use crate::error::Result;
use crate::euler::{check_factorial_cap, euler_product, factorial, DEFAULT_FACTORIAL_CAP};
use crate::primes::PrimeTable;
use crate::product::ln_biguint;
use crate::serde_dec;

/// Exponent of N! in f(N) = (N!)^14.
pub const THEOREM1_F_EXPONENT: u32 = 14;
/// Power of q_N that the irrationality-measure bound 5.45 rules out.
pub const THEOREM1_Q_POWER: u32 = 6;

/// The exact comparison 10 q_N^6 < f(N) for one N.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Theorem1Gate {
    pub n: u64,
    #[serde(with = "serde_dec::biguint")]
    pub q_n: BigUint,
    /// Decimal digits of f(N) = (N!)^14.
    pub f_digits: usize,
    /// 10 q_N^6 < (N!)^14.
    pub holds: bool,
    /// 10 q_N^6 < (N!)^12, i.e. the gate with the smaller exponent.
    pub holds_with_exponent_12: bool,
    /// ln f(N) - ln(10 q_N^6).
    pub ln_slack: f64,
    /// When the gate holds: absent a prime in (N, f(N)], the Euler product
    /// p_N/q_N would lie within 1/q_N^6 of pi^2/6.
    pub reading: Option<&'static str>,
}

const THEOREM1_READING: &str =
    "if no prime lies in (N, f(N)] then |pi^2/6 - p_N/q_N| <= 10/f(N) < 1/q_N^6";

pub fn theorem1_gate(t: &PrimeTable, n: u64) -> Result<Theorem1Gate> {
    theorem1_gate_capped(t, n, DEFAULT_FACTORIAL_CAP)
}

pub fn theorem1_gate_capped(t: &PrimeTable, n: u64, cap: u64) -> Result<Theorem1Gate> {
    check_factorial_cap(n, cap)?;
    let q_n = euler_product(t, n)?.q();
    let fact = factorial(n);
    let f12 = fact.pow(12);
    let f = &f12 * fact.pow(THEOREM1_F_EXPONENT - 12);
    let lhs = q_n.pow(THEOREM1_Q_POWER) * 10u32;
    let holds = lhs < f;
    Ok(Theorem1Gate {
        n,
        f_digits: f.to_string().len(),
        holds,
        holds_with_exponent_12: lhs < f12,
        ln_slack: ln_biguint(&f) - ln_biguint(&lhs),
        reading: holds.then_some(THEOREM1_READING),
        q_n,
    })
}

/// Smallest N in `range` at which the gate holds.
pub fn theorem1_first_pass(
    t: &PrimeTable,
    range: std::ops::RangeInclusive<u64>,
) -> Result<Option<u64>> {
    for n in range {
        if theorem1_gate(t, n)?.holds {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Largest k with 2^(2^k) <= x, or 0. Saturates at `u64::MAX` when
/// log log x overflows f64.
pub fn euclid_baseline(x: &LogTower) -> u64 {
    let v = x.value_f64();
    if v.is_finite() {
        // Powers of two are exact in f64, and v < 2^1024 keeps k <= 9.
        let mut k = 0u64;
        while k < 10 && v >= 2f64.powi(1 << (k + 1)) {
            k += 1;
        }
        return k;
    }
    // ln ln x >= k ln 2 + ln ln 2
    let Ok(loglog) = x.ln().and_then(|l| l.ln()) else { return 0 };
    let ll = loglog.value_f64();
    if !ll.is_finite() {
        return u64::MAX;
    }
    let k = ((ll - std::f64::consts::LN_2.ln()) / std::f64::consts::LN_2).floor();
    if k >= u64::MAX as f64 {
        u64::MAX
    } else {
        k.max(0.0) as u64
    }
}

/// Convenience for integers that fit in f64 exactly.
pub fn euclid_baseline_int(x: u64) -> u64 {
    tower_normalize(0, x as f64).map_or(0, |t| euclid_baseline(&t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primes::sieve;

    #[test]
    fn gate_examples() {
        let t = sieve(300).unwrap();
        let g1 = theorem1_gate(&t, 1).unwrap();
        assert_eq!(g1.q_n, BigUint::from(1u32));
        assert_eq!(g1.f_digits, 1);
        assert!(!g1.holds);
        assert!(g1.reading.is_none());
        let g2 = theorem1_gate(&t, 2).unwrap();
        assert_eq!(g2.q_n, BigUint::from(3u32));
        assert!(g2.holds);
        assert!((g2.ln_slack - (16384f64 / 7290.0).ln()).abs() < 1e-12);
        let g5 = theorem1_gate(&t, 5).unwrap();
        assert_eq!(g5.q_n, BigUint::from(16u32));
        assert!(g5.holds);
        assert!(g5.reading.is_some());
        assert_eq!(theorem1_first_pass(&t, 1..=10).unwrap(), Some(2));
    }

    #[test]
    fn gate_with_exponent_12() {
        let t = sieve(300).unwrap();
        // 10 * 3^6 = 7290 > 2^12 = 4096
        assert!(!theorem1_gate(&t, 2).unwrap().holds_with_exponent_12);
        assert!(theorem1_gate(&t, 200).unwrap().holds_with_exponent_12);
    }

    #[test]
    fn gate_cap() {
        let t = sieve(300).unwrap();
        assert!(theorem1_gate_capped(&t, 100, 50).is_err());
    }

    #[test]
    fn euclid_examples() {
        assert_eq!(euclid_baseline_int(4), 1);
        assert_eq!(euclid_baseline_int(16), 2);
        assert_eq!(euclid_baseline_int(3), 0);
        assert_eq!(euclid_baseline_int(15), 1);
        assert_eq!(euclid_baseline_int(65_536), 4);
        assert_eq!(euclid_baseline_int(65_535), 3);
        assert_eq!(euclid_baseline(&tower_normalize(0, -5.0).unwrap()), 0);
    }

    #[test]
    fn euclid_on_towers() {
        // x = exp(exp(10)): ln ln x = 10, k = floor((10 - ln ln 2)/ln 2) = 14
        let x = tower_normalize(2, 10.0).unwrap();
        assert_eq!(euclid_baseline(&x), 14);
        assert_eq!(euclid_baseline(&tower_normalize(9, 2.0).unwrap()), u64::MAX);
        // 2^(2^9) fits in f64
        assert_eq!(euclid_baseline(&LogTower::from_f64(2f64.powi(512)).unwrap()), 9);
    }
}
