//! Prime-gap staircases: chains N_0 < N_1 < ... where, under an
//! irrationality-measure hypothesis, each interval (N_i, N_{i+1}] must hold a
//! prime because otherwise p_N/q_N would approximate pi^2/6 too well.
//!
//! Each step bounds q_N by Q(N), sets N_{i+1} = 10 Q(N)^m + 1 and records the
//! exact inequality 10 q^m < N_{i+1}. Once the integers outgrow the
//! big-integer budget the chain continues on exp-towers with a logarithmic
//! witness.

use std::cmp::Ordering;
use std::f64::consts::{E, LN_10};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::tower::{tower_compare, LogTower};
use crate::approx::DEFAULT_BIGINT_BUDGET_BITS;
use crate::error::{Error, Result};
use crate::euler::{euler_product, factorial, EulerProducts};
use crate::primes::PrimeTable;
use crate::product::ln_biguint;
use crate::serde_dec;

/// Assumed upper bound pi(x) <= g(x).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "g", rename_all = "kebab-case")]
pub enum PiAssumption {
    /// g(x) = (ln x)^(e-1) / (4b).
    LogPower { b: f64 },
    /// g(x) = ln ln x / (4b).
    LogLog { b: f64 },
    /// g(x) = x / (ln x)^(1 + epsilon).
    NearPnt { epsilon: f64 },
}

impl PiAssumption {
    /// g evaluated from ln x. `None` when g is not positive there.
    fn g_from_ln(&self, ln_x: f64) -> Option<f64> {
        if ln_x <= 1.0 {
            return None;
        }
        let g = match *self {
            PiAssumption::LogPower { b } => ln_x.powf(E - 1.0) / (4.0 * b),
            PiAssumption::LogLog { b } => ln_x.ln() / (4.0 * b),
            PiAssumption::NearPnt { epsilon } => (ln_x - (1.0 + epsilon) * ln_x.ln()).exp(),
        };
        (g > 0.0).then_some(g)
    }

    /// g(x) as a tower, for x beyond the f64 range.
    fn g_tower(&self, x: &LogTower) -> Result<Option<LogTower>> {
        let ln_x = x.ln()?;
        if let Some(l) = ln_x.value_f64().is_finite().then(|| ln_x.value_f64()) {
            if let Some(g) = self.g_from_ln(l) {
                if g.is_finite() {
                    return Ok(Some(LogTower::from_f64(g)?));
                }
            }
            if let PiAssumption::NearPnt { epsilon } = *self {
                return Ok(Some(LogTower::from_ln(l - (1.0 + epsilon) * l.ln())?));
            }
            return Ok(None);
        }
        let lnln = ln_x.ln()?;
        Ok(Some(match *self {
            PiAssumption::LogPower { b } => lnln.mul_scalar(E - 1.0)?.exp()?.mul_scalar(1.0 / (4.0 * b))?,
            PiAssumption::LogLog { b } => lnln.mul_scalar(1.0 / (4.0 * b))?,
            // x / (ln x)^(1+eps) agrees with x to tower precision here.
            PiAssumption::NearPnt { .. } => *x,
        }))
    }
}

/// How q_N is bounded at each step.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum QBoundMode {
    /// q_N <= (N!)^2.
    FactorialSquared,
    /// q_N <= N^(2 pi(N)).
    #[serde(rename = "power-2piN")]
    PowerTwoPiN,
    /// q_N <= N^ceil(2 g(N)) under pi(N) <= g(N).
    AssumedG { assumption: PiAssumption },
}

impl QBoundMode {
    pub fn name(&self) -> &'static str {
        match self {
            QBoundMode::FactorialSquared => "factorial-squared",
            QBoundMode::PowerTwoPiN => "power-2piN",
            QBoundMode::AssumedG { .. } => "assumed-g",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Hypothesis {
    /// Assumed bound b on the irrationality measure of pi^2/6.
    pub measure_bound: f64,
    /// Power m > b of q_N used in the gate 10/f(N) < 1/q_N^m.
    pub exponent: u32,
    pub q_mode: QBoundMode,
}

/// Smallest integer exceeding `b`: the default exponent for a measure bound.
pub fn default_exponent(b: f64) -> u32 {
    (b.floor() + 1.0).max(1.0) as u32
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum StairValue {
    Exact {
        #[serde(with = "serde_dec::biguint")]
        value: BigUint,
    },
    Logarithmic {
        /// Natural log of the value, when finite in f64.
        ln: Option<f64>,
        tower: LogTower,
    },
}

impl StairValue {
    pub fn to_tower(&self) -> LogTower {
        match self {
            StairValue::Exact { value } => {
                let v = value.to_f64().unwrap_or(f64::INFINITY);
                if v.is_finite() {
                    LogTower::from_f64(v).expect("finite")
                } else {
                    LogTower::from_ln(ln_biguint(value)).expect("finite log")
                }
            }
            StairValue::Logarithmic { tower, .. } => *tower,
        }
    }

    pub fn exact(&self) -> Option<&BigUint> {
        match self {
            StairValue::Exact { value } => Some(value),
            StairValue::Logarithmic { .. } => None,
        }
    }

    pub fn compare(&self, other: &StairValue) -> Ordering {
        match (self.exact(), other.exact()) {
            (Some(a), Some(b)) => a.cmp(b),
            _ => tower_compare(&self.to_tower(), &other.to_tower()),
        }
    }

    fn from_tower(tower: LogTower) -> Self {
        StairValue::Logarithmic { ln: tower.ln_f64(), tower }
    }
}

/// Where the pi(N) value inside Q(N) came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PiSource {
    /// Not needed by the q-bound mode.
    Unused,
    Sieve,
    /// pi(N) <= ceil(N/2), valid for every N >= 1.
    HalfBound,
    Assumed,
}

/// Which integer the exact witness raises to the m-th power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QSource {
    /// The actual reduced denominator q_N.
    QN,
    /// The bound Q(N), when q_N is beyond the sieve.
    QBound,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "witness_mode", rename_all = "lowercase")]
pub enum StepWitness {
    /// `holds` records the outcome of 10 * q^m < N_{i+1}.
    Exact {
        q_source: QSource,
        #[serde(with = "serde_dec::biguint")]
        q: BigUint,
        holds: bool,
    },
    Logarithmic {
        ln_q_bound: Option<f64>,
        ln_next: Option<f64>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StaircaseStep {
    pub index: usize,
    pub from: StairValue,
    pub to: StairValue,
    pub pi_source: PiSource,
    pub witness: StepWitness,
    /// A prime in (from, to] found by the sieve; `None` when `to` is beyond it.
    pub sieve_confirmed: Option<bool>,
    /// Implied pi(to) >= pi(N_start) + index + 1, conditional on the hypothesis.
    pub pi_lower_bound: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StaircaseCertificate {
    pub hypothesis: Hypothesis,
    pub start: u64,
    pub pi_start: u64,
    pub steps: Vec<StaircaseStep>,
}

/// ln N! in machine precision (direct sum for small N, Stirling otherwise).
fn ln_factorial(n: f64) -> f64 {
    if n < 256.0 {
        return (2..=n as u64).map(|k| (k as f64).ln()).sum();
    }
    n * n.ln() - n + 0.5 * (2.0 * std::f64::consts::PI * n).ln() + 1.0 / (12.0 * n)
}

/// Exponent E with Q(N) = base^E, for the modes where Q(N) is a power of N.
enum ExactQ {
    FactorialSquared,
    Power { exponent: u64, pi_source: PiSource },
}

struct Builder<'a> {
    table: &'a PrimeTable,
    hyp: Hypothesis,
    budget_bits: u64,
    euler: EulerProducts<'a>,
}

impl Builder<'_> {
    fn exact_q_shape(&self, n: &BigUint, ln_n: f64) -> Option<ExactQ> {
        match self.hyp.q_mode {
            QBoundMode::FactorialSquared => Some(ExactQ::FactorialSquared),
            QBoundMode::PowerTwoPiN => {
                let n64 = n.to_u64()?;
                if n64 <= self.table.limit() {
                    let pi = self.table.prime_count(n64).ok()?;
                    Some(ExactQ::Power { exponent: 2 * pi, pi_source: PiSource::Sieve })
                } else {
                    Some(ExactQ::Power { exponent: 2 * n64.div_ceil(2), pi_source: PiSource::HalfBound })
                }
            }
            QBoundMode::AssumedG { assumption } => {
                let g = assumption.g_from_ln(ln_n).unwrap_or(0.0);
                let e = (2.0 * g).ceil();
                (e < 1e15).then_some(ExactQ::Power { exponent: e as u64, pi_source: PiSource::Assumed })
            }
        }
    }

    /// Estimated bits of 10 Q(N)^m.
    fn estimated_bits(&self, shape: &ExactQ, n: &BigUint, ln_n: f64) -> f64 {
        let ln_q = match shape {
            ExactQ::FactorialSquared => match n.to_f64() {
                Some(v) if v.is_finite() => 2.0 * ln_factorial(v),
                _ => f64::INFINITY,
            },
            ExactQ::Power { exponent, .. } => *exponent as f64 * ln_n,
        };
        f64::from(self.hyp.exponent) * ln_q / std::f64::consts::LN_2 + 4.0
    }

    fn exact_step(&mut self, n: &BigUint) -> Result<Option<(BigUint, PiSource, StepWitness)>> {
        let ln_n = ln_biguint(n);
        let Some(shape) = self.exact_q_shape(n, ln_n) else { return Ok(None) };
        if self.estimated_bits(&shape, n, ln_n) > self.budget_bits as f64 {
            return Ok(None);
        }
        let (q_bound, pi_source) = match shape {
            ExactQ::FactorialSquared => {
                let f = factorial(n.to_u64().expect("bounded by budget"));
                (&f * &f, PiSource::Unused)
            }
            ExactQ::Power { exponent, pi_source } => (n.pow(exponent as u32), pi_source),
        };
        let m = self.hyp.exponent;
        let mut next = q_bound.pow(m) * 10u32 + 1u32;
        if &next <= n {
            next = n + 1u32;
        }
        let n64 = n.to_u64().filter(|&v| v <= self.table.limit());
        let (q_source, q) = match n64 {
            Some(v) => {
                self.euler.advance_to(v)?;
                (QSource::QN, self.euler.denominator())
            }
            None => (QSource::QBound, q_bound),
        };
        let holds = q.pow(m) * 10u32 < next;
        Ok(Some((next, pi_source, StepWitness::Exact { q_source, q, holds })))
    }

    /// ln Q(N) as a tower, for N beyond exact reach.
    fn ln_q_tower(&self, n: &StairValue) -> Result<(LogTower, PiSource)> {
        let x = n.to_tower();
        let ln_x = x.ln()?;
        Ok(match self.hyp.q_mode {
            QBoundMode::FactorialSquared => {
                let v = x.value_f64();
                if v.is_finite() {
                    (LogTower::from_f64(2.0 * ln_factorial(v))?, PiSource::Unused)
                } else {
                    // 2 ln N! ~ 2 N (ln N - 1)
                    (x.mul(&ln_x.add_scalar(-1.0)?)?.mul_scalar(2.0)?, PiSource::Unused)
                }
            }
            QBoundMode::PowerTwoPiN => {
                if let Some(v) = n.exact().and_then(|v| v.to_u64()).filter(|&v| v <= self.table.limit()) {
                    let pi = self.table.prime_count(v)? as f64;
                    (LogTower::from_f64(2.0 * pi * (v as f64).ln())?, PiSource::Sieve)
                } else {
                    // 2 ceil(N/2) ln N <= (N + 1) ln N
                    (x.add_scalar(1.0)?.mul(&ln_x)?, PiSource::HalfBound)
                }
            }
            QBoundMode::AssumedG { assumption } => match assumption.g_tower(&x)? {
                Some(g) => (g.mul(&ln_x)?.mul_scalar(2.0)?, PiSource::Assumed),
                None => (LogTower::from_f64(0.0)?, PiSource::Assumed),
            },
        })
    }

    fn log_step(&self, n: &StairValue) -> Result<(StairValue, PiSource, StepWitness)> {
        let (ln_q, pi_source) = self.ln_q_tower(n)?;
        let ln_next = ln_q.mul_scalar(f64::from(self.hyp.exponent))?.add_scalar(LN_10)?;
        let next = ln_next.exp()?;
        if tower_compare(&next, &n.to_tower()) != Ordering::Greater {
            return Err(Error::Domain(format!(
                "q-bound mode {} gives no growth at this step",
                self.hyp.q_mode.name()
            )));
        }
        let witness = StepWitness::Logarithmic { ln_q_bound: ln_q.value_f64().is_finite().then(|| ln_q.value_f64()), ln_next: next.ln_f64() };
        Ok((StairValue::from_tower(next), pi_source, witness))
    }
}

/// Builds a staircase of `steps` steps starting at `n_start`.
pub fn staircase_certify(
    t: &PrimeTable,
    hypothesis: Hypothesis,
    n_start: u64,
    steps: usize,
) -> Result<StaircaseCertificate> {
    staircase_certify_budget(t, hypothesis, n_start, steps, DEFAULT_BIGINT_BUDGET_BITS)
}

pub fn staircase_certify_budget(
    t: &PrimeTable,
    hypothesis: Hypothesis,
    n_start: u64,
    steps: usize,
    budget_bits: u64,
) -> Result<StaircaseCertificate> {
    if !(f64::from(hypothesis.exponent) > hypothesis.measure_bound) {
        return Err(Error::Domain(format!(
            "exponent m = {} must exceed the measure bound b = {}",
            hypothesis.exponent, hypothesis.measure_bound
        )));
    }
    if n_start < 2 {
        return Err(Error::Domain(format!("N_start must be at least 2, got {n_start}")));
    }
    if steps == 0 {
        return Err(Error::Domain("steps must be positive".into()));
    }
    let pi_start = t.prime_count(n_start)?;
    let mut b = Builder { table: t, hyp: hypothesis, budget_bits, euler: EulerProducts::new(t) };
    let mut current = StairValue::Exact { value: BigUint::from(n_start) };
    let mut out = Vec::with_capacity(steps);
    for index in 0..steps {
        let exact = match &current {
            StairValue::Exact { value } => b.exact_step(value)?,
            StairValue::Logarithmic { .. } => None,
        };
        let (next, pi_source, witness) = match exact {
            Some((v, pi_source, w)) => (StairValue::Exact { value: v }, pi_source, w),
            None => b.log_step(&current)?,
        };
        let sieve_confirmed = match (current.exact().and_then(|v| v.to_u64()), next.exact().and_then(|v| v.to_u64())) {
            (Some(lo), Some(hi)) => t.has_prime_in(lo, hi),
            _ => None,
        };
        out.push(StaircaseStep {
            index,
            from: current,
            to: next.clone(),
            pi_source,
            witness,
            sieve_confirmed,
            pi_lower_bound: pi_start + index as u64 + 1,
        });
        current = next;
    }
    Ok(StaircaseCertificate { hypothesis, start: n_start, pi_start, steps: out })
}

impl StaircaseCertificate {
    /// Recomputes every exact witness from scratch: q_N through a fresh Euler
    /// product (or Q(N) from the mode) and the comparison 10 q^m < N_{i+1}.
    /// `None` marks logarithmic steps.
    pub fn reverify(&self, t: &PrimeTable) -> Result<Vec<Option<bool>>> {
        self.steps.iter().map(|s| reverify_step(t, &self.hypothesis, s)).collect()
    }

    /// Steps are strictly increasing and every confirmed interval has a prime.
    pub fn is_consistent(&self, t: &PrimeTable) -> bool {
        self.steps.iter().all(|s| {
            s.to.compare(&s.from) == Ordering::Greater
                && match (s.sieve_confirmed, s.from.exact(), s.to.exact()) {
                    (Some(true), Some(lo), Some(hi)) => {
                        let (lo, hi) = (lo.to_u64().unwrap_or(u64::MAX), hi.to_u64().unwrap_or(u64::MAX));
                        t.has_prime_in(lo, hi) == Some(true)
                    }
                    (Some(false), ..) => false,
                    _ => true,
                }
        })
    }
}

pub fn reverify_step(t: &PrimeTable, hyp: &Hypothesis, step: &StaircaseStep) -> Result<Option<bool>> {
    let StepWitness::Exact { q_source, q, holds } = &step.witness else { return Ok(None) };
    let (Some(from), Some(to)) = (step.from.exact(), step.to.exact()) else {
        return Ok(Some(false));
    };
    let recomputed = match q_source {
        QSource::QN => euler_product(t, from.to_u64().unwrap_or(u64::MAX))?.q(),
        QSource::QBound => match hyp.q_mode {
            QBoundMode::FactorialSquared => {
                let f = factorial(from.to_u64().unwrap_or(u64::MAX));
                &f * &f
            }
            QBoundMode::PowerTwoPiN => {
                let n = from.to_u64().unwrap_or(u64::MAX);
                let e = if n <= t.limit() { 2 * t.prime_count(n)? } else { 2 * n.div_ceil(2) };
                from.pow(e as u32)
            }
            QBoundMode::AssumedG { assumption } => {
                let g = assumption.g_from_ln(ln_biguint(from)).unwrap_or(0.0);
                from.pow((2.0 * g).ceil() as u32)
            }
        },
    };
    if &recomputed != q || recomputed.is_zero() {
        return Ok(Some(false));
    }
    let outcome = recomputed.pow(hyp.exponent) * 10u32 < *to;
    Ok(Some(outcome == *holds))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primes::sieve;

    fn hyp(mode: QBoundMode) -> Hypothesis {
        Hypothesis { measure_bound: 5.45, exponent: 6, q_mode: mode }
    }

    #[test]
    fn default_exponent_is_next_integer() {
        assert_eq!(default_exponent(5.45), 6);
        assert_eq!(default_exponent(5.0), 6);
        assert_eq!(default_exponent(1.9), 2);
    }

    #[test]
    fn power_mode_from_five() {
        let t = sieve(1000).unwrap();
        let c = staircase_certify(&t, hyp(QBoundMode::PowerTwoPiN), 5, 1).unwrap();
        let expect = BigUint::from(15625u32).pow(6) * 10u32 + 1u32;
        assert_eq!(c.steps[0].to.exact(), Some(&expect));
        assert_eq!(c.steps[0].pi_source, PiSource::Sieve);
        assert!(matches!(
            &c.steps[0].witness,
            StepWitness::Exact { q_source: QSource::QN, holds: true, .. }
        ));
        assert_eq!(c.pi_start, 3);
        assert_eq!(c.steps[0].pi_lower_bound, 4);
    }

    #[test]
    fn factorial_mode_from_five() {
        let t = sieve(1000).unwrap();
        let c = staircase_certify(&t, hyp(QBoundMode::FactorialSquared), 5, 1).unwrap();
        let expect = BigUint::from(14400u32).pow(6) * 10u32 + 1u32;
        assert_eq!(c.steps[0].to.exact(), Some(&expect));
        // 14400^6 = 8.916e24, so N_next is about 8.9e25
        let ln = ln_biguint(&expect);
        assert!((ln - (8.916e25f64).ln()).abs() < 0.001);
    }

    #[test]
    fn budget_forces_logarithmic_steps() {
        let t = sieve(1000).unwrap();
        let c = staircase_certify_budget(&t, hyp(QBoundMode::FactorialSquared), 5, 3, 64).unwrap();
        assert!(c.steps.iter().all(|s| matches!(s.witness, StepWitness::Logarithmic { .. })));
        let ln1 = c.steps[0].to.to_tower().ln_f64().unwrap();
        assert!((ln1 - (10.0 * 14400f64.powi(6)).ln()).abs() < 1e-9);
        assert!(c.is_consistent(&t));
    }

    #[test]
    fn steps_strictly_increase_and_reverify() {
        let t = sieve(100_000).unwrap();
        for mode in [QBoundMode::FactorialSquared, QBoundMode::PowerTwoPiN] {
            for start in [2u64, 3, 7, 10] {
                let c = staircase_certify(&t, hyp(mode), start, 6).unwrap();
                assert_eq!(c.steps.len(), 6);
                assert!(c.is_consistent(&t));
                for r in c.reverify(&t).unwrap().into_iter().flatten() {
                    assert!(r);
                }
                for s in &c.steps {
                    if let StepWitness::Exact { holds, .. } = s.witness {
                        assert!(holds);
                    }
                }
            }
        }
    }

    #[test]
    fn sieve_confirms_first_step_from_two() {
        let t = sieve(100_000).unwrap();
        let c = staircase_certify(&t, hyp(QBoundMode::PowerTwoPiN), 2, 2).unwrap();
        // Q(2) = 2^2, N_1 = 10 * 4^6 + 1 = 40961
        assert_eq!(c.steps[0].to.exact(), Some(&BigUint::from(40961u32)));
        assert_eq!(c.steps[0].sieve_confirmed, Some(true));
        assert!(matches!(c.steps[1].witness, StepWitness::Exact { q_source: QSource::QN, .. }));
    }

    #[test]
    fn power_mode_beyond_sieve_uses_half_bound() {
        let t = sieve(100).unwrap();
        let c = staircase_certify(&t, hyp(QBoundMode::PowerTwoPiN), 2, 2).unwrap();
        assert_eq!(c.steps[1].pi_source, PiSource::HalfBound);
        assert!(matches!(c.steps[1].witness, StepWitness::Exact { q_source: QSource::QBound, holds: true, .. }));
        assert_eq!(c.reverify(&t).unwrap(), vec![Some(true), Some(true)]);
    }

    #[test]
    fn power_dominated_by_factorial_except_small_starts() {
        let t = sieve(100_000).unwrap();
        for start in [2u64, 4, 6, 7, 8, 9, 10, 11, 12, 20, 50] {
            let p = staircase_certify(&t, hyp(QBoundMode::PowerTwoPiN), start, 4).unwrap();
            let f = staircase_certify(&t, hyp(QBoundMode::FactorialSquared), start, 4).unwrap();
            for (a, b) in p.steps.iter().zip(&f.steps) {
                assert_ne!(a.to.compare(&b.to), Ordering::Greater, "start {start}, step {}", a.index);
            }
        }
        // N^(2 pi(N)) exceeds (N!)^2 at N = 3 and N = 5.
        for start in [3u64, 5] {
            let p = staircase_certify(&t, hyp(QBoundMode::PowerTwoPiN), start, 1).unwrap();
            let f = staircase_certify(&t, hyp(QBoundMode::FactorialSquared), start, 1).unwrap();
            assert_eq!(p.steps[0].to.compare(&f.steps[0].to), Ordering::Greater);
        }
    }

    #[test]
    fn assumed_modes_run() {
        let t = sieve(1000).unwrap();
        for a in [
            PiAssumption::LogPower { b: 5.45 },
            PiAssumption::LogLog { b: 5.45 },
            PiAssumption::NearPnt { epsilon: 0.5 },
        ] {
            let c = staircase_certify(&t, hyp(QBoundMode::AssumedG { assumption: a }), 100, 5).unwrap();
            assert_eq!(c.steps.len(), 5);
            assert!(c.is_consistent(&t));
            for r in c.reverify(&t).unwrap().into_iter().flatten() {
                assert!(r);
            }
        }
    }

    #[test]
    fn rejects_bad_hypotheses() {
        let t = sieve(100).unwrap();
        let bad = Hypothesis { measure_bound: 6.0, exponent: 6, q_mode: QBoundMode::PowerTwoPiN };
        assert!(staircase_certify(&t, bad, 5, 1).is_err());
        assert!(staircase_certify(&t, hyp(QBoundMode::PowerTwoPiN), 1, 1).is_err());
        assert!(staircase_certify(&t, hyp(QBoundMode::PowerTwoPiN), 5, 0).is_err());
        assert!(matches!(
            staircase_certify(&t, hyp(QBoundMode::PowerTwoPiN), 500, 1),
            Err(Error::Range(_))
        ));
    }

    #[test]
    fn serializes_as_records() {
        let t = sieve(1000).unwrap();
        let c = staircase_certify_budget(&t, hyp(QBoundMode::PowerTwoPiN), 5, 2, 1 << 12).unwrap();
        let json = serde_json::to_value(&c).unwrap();
        assert_eq!(json["steps"][0]["to"]["mode"], "exact");
        assert_eq!(json["steps"][0]["witness"]["witness_mode"], "exact");
        assert_eq!(json["steps"][1]["witness"]["witness_mode"], "logarithmic");
        assert!(json["steps"][1]["to"]["ln"].is_number());
        assert_eq!(json["hypothesis"]["q_mode"]["kind"], "power-2piN");
    }
}
