//! Certified continued fractions and irrationality-exponent arithmetic.
//!
//! Partial quotients are taken from the common prefix of the Gauss-map
//! expansions of both enclosure endpoints, so each emitted quotient holds for
//! every real in the enclosure.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{zeta2_enclosure_capped, ExactRational, RealEnclosure, DEFAULT_DIGIT_CAP};
use crate::error::{Error, Result};
use crate::euler::exponent_of;
use crate::primes::PrimeTable;
use crate::product::{ln_biguint, product};
use crate::serde_dec;

/// Default Rhin-Viola constants (a, b).
pub const RV_A: f64 = -2.553_060_95;
pub const RV_B: f64 = 1.700_367_09;

/// Budget, in bits, for exact integers built by inequality checks.
pub const DEFAULT_BIGINT_BUDGET_BITS: u64 = 1 << 22;

/// Gauss-map expansion of a nonnegative rational `num/den`, up to `max_terms`.
fn rational_quotients(num: &BigUint, den: &BigUint, max_terms: usize) -> Vec<BigUint> {
    let (mut n, mut d) = (num.clone(), den.clone());
    let mut out = Vec::new();
    while out.len() < max_terms && !d.is_zero() {
        let (a, r) = n.div_rem(&d);
        out.push(a);
        n = d;
        d = r;
    }
    out
}

fn magnitude_ratio(x: &ExactRational) -> (BigUint, BigUint) {
    (x.numer().magnitude().clone(), x.denom().magnitude().clone())
}

/// Partial quotients valid for every real in `x`.
pub fn continued_fraction(x: &RealEnclosure, max_terms: usize) -> Result<Vec<BigUint>> {
    if !x.lo().is_positive() {
        return Err(Error::Domain(format!("continued fraction needs lo > 0, got {}", x.lo())));
    }
    let (ln, ld) = magnitude_ratio(x.lo());
    if x.is_point() {
        return Ok(rational_quotients(&ln, &ld, max_terms));
    }
    let (hn, hd) = magnitude_ratio(x.hi());
    let lo_q = rational_quotients(&ln, &ld, max_terms);
    let hi_q = rational_quotients(&hn, &hd, max_terms);
    Ok(lo_q
        .into_iter()
        .zip(hi_q)
        .take_while(|(a, b)| a == b)
        .map(|(a, _)| a)
        .collect())
}

/// One convergent p_k/q_k of a continued fraction.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvergentRecord {
    pub index: usize,
    #[serde(with = "serde_dec::biguint")]
    pub partial_quotient: BigUint,
    #[serde(with = "serde_dec::bigint")]
    pub p: BigInt,
    #[serde(with = "serde_dec::biguint")]
    pub q: BigUint,
    /// -ln|x - p/q| / ln q, filled in by [`measure_exponents`].
    #[serde(with = "serde_dec::opt_f64_str")]
    pub exponent: Option<f64>,
}

impl ConvergentRecord {
    pub fn value(&self) -> ExactRational {
        ExactRational::new(self.p.clone(), BigInt::from_biguint(Sign::Plus, self.q.clone()))
            .expect("q >= 1")
    }
}

/// Convergents via p_k = a_k p_{k-1} + p_{k-2}, q_k = a_k q_{k-1} + q_{k-2}.
pub fn convergents(quotients: &[BigUint]) -> Result<Vec<ConvergentRecord>> {
    if quotients.is_empty() {
        return Err(Error::Domain("convergents need at least one partial quotient".into()));
    }
    let (mut p_prev, mut p_cur) = (BigInt::zero(), BigInt::one());
    let (mut q_prev, mut q_cur) = (BigUint::one(), BigUint::zero());
    let mut out = Vec::with_capacity(quotients.len());
    for (index, a) in quotients.iter().enumerate() {
        if index >= 1 && a.is_zero() {
            return Err(Error::Domain(format!("partial quotient {index} is zero")));
        }
        let a_signed = BigInt::from_biguint(Sign::Plus, a.clone());
        let p_next = &a_signed * &p_cur + &p_prev;
        let q_next = a * &q_cur + &q_prev;
        p_prev = std::mem::replace(&mut p_cur, p_next);
        q_prev = std::mem::replace(&mut q_cur, q_next);
        out.push(ConvergentRecord {
            index,
            partial_quotient: a.clone(),
            p: p_cur.clone(),
            q: q_cur.clone(),
            exponent: None,
        });
    }
    Ok(out)
}

/// p_k q_{k-1} - p_{k-1} q_k for consecutive records.
pub fn determinant(prev: &ConvergentRecord, cur: &ConvergentRecord) -> BigInt {
    let q_prev = BigInt::from_biguint(Sign::Plus, prev.q.clone());
    let q_cur = BigInt::from_biguint(Sign::Plus, cur.q.clone());
    &cur.p * q_prev - &prev.p * q_cur
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MeasuredConvergents {
    pub records: Vec<ConvergentRecord>,
    /// Running maximum of the exponents so far, aligned with `records`.
    pub running_max: Vec<Option<f64>>,
}

impl MeasuredConvergents {
    pub fn max_exponent(&self) -> Option<f64> {
        self.running_max.last().copied().flatten()
    }
}

/// Fills in empirical exponents against the fixed enclosure `x`. Every
/// record with q >= 2 must have `|x - p/q|` separated from zero by more than
/// the enclosure width.
pub fn measure_exponents(x: &RealEnclosure, records: &[ConvergentRecord]) -> Result<MeasuredConvergents> {
    let mut out = Vec::with_capacity(records.len());
    let mut running_max = Vec::with_capacity(records.len());
    let mut best: Option<f64> = None;
    for rec in records {
        let mut rec = rec.clone();
        if rec.q > BigUint::one() {
            let gap = x.sub_rational(&rec.value()).abs();
            if !(gap.lo().is_positive() && gap.width() < *gap.lo()) {
                return Err(Error::PrecisionExhausted {
                    digits: 0,
                    context: format!(
                        "enclosure too wide to measure convergent {}/{}",
                        rec.p, rec.q
                    ),
                });
            }
            rec.exponent = exponent_of(&gap, &rec.q);
        }
        if let Some(e) = rec.exponent {
            best = Some(best.map_or(e, |b| b.max(e)));
        }
        running_max.push(best);
        out.push(rec);
    }
    Ok(MeasuredConvergents { records: out, running_max })
}

/// Convergents of zeta(2) with q <= `max_q` and their measured exponents,
/// from a `digits`-digit enclosure. Fails if the enclosure cannot certify
/// enough quotients to reach `max_q` or to separate the last gap.
pub fn zeta2_convergents(digits: u32, max_q: &BigUint) -> Result<MeasuredConvergents> {
    let z = zeta2_enclosure_capped(digits, DEFAULT_DIGIT_CAP)?;
    let quotients = continued_fraction(&z, usize::MAX)?;
    let all = convergents(&quotients)?;
    let reached = all.last().is_some_and(|r| &r.q > max_q);
    if !reached {
        return Err(Error::PrecisionExhausted {
            digits,
            context: format!("{} certified quotients do not reach q > {max_q}", quotients.len()),
        });
    }
    let wanted: Vec<ConvergentRecord> = all.into_iter().take_while(|r| &r.q <= max_q).collect();
    measure_exponents(&z, &wanted)
}

/// Which (rho, sigma) derivation to use from the constants (a, b).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Lemma4Mode {
    /// rho = b, sigma = -a.
    Raw,
    /// rho = b + 2, sigma = -(a + 2).
    Shifted,
}

impl std::str::FromStr for Lemma4Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "raw" => Ok(Self::Raw),
            "shifted" => Ok(Self::Shifted),
            other => Err(Error::Parse(format!("unknown lemma4 mode {other:?}"))),
        }
    }
}

/// Growth constants of a rational approximation sequence: |b_n| grows at
/// most like exp(rho n) and |a_n - b_n alpha| decays like exp(-sigma n).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RVConstants {
    pub a: f64,
    pub b: f64,
    pub rho: f64,
    pub sigma: f64,
}

impl RVConstants {
    pub fn new(a: f64, b: f64, mode: Lemma4Mode) -> Self {
        let (rho, sigma) = match mode {
            Lemma4Mode::Raw => (b, -a),
            Lemma4Mode::Shifted => (b + 2.0, -(a + 2.0)),
        };
        Self { a, b, rho, sigma }
    }

    pub fn rhin_viola(mode: Lemma4Mode) -> Self {
        Self::new(RV_A, RV_B, mode)
    }
}

/// mu <= 1 + rho/sigma, with (rho, sigma) derived from (a, b) per `mode`.
pub fn lemma4_bound(a: f64, b: f64, mode: Lemma4Mode) -> Result<f64> {
    let c = RVConstants::new(a, b, mode);
    if !(c.sigma > 0.0) {
        return Err(Error::Domain(format!("sigma = {} must be positive", c.sigma)));
    }
    Ok(1.0 + c.rho / c.sigma)
}

/// Outcome of p_{n+1} <= (p_1 ... p_n)^(2 mu), decided in integers.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SondowWitness {
    pub n: u64,
    pub p_next: u64,
    #[serde(with = "serde_dec::biguint")]
    pub primorial: BigUint,
    pub mu: ExactRational,
    /// p_{n+1}^den is compared with primorial^(2 num), mu = num/den.
    pub lhs_exponent: u64,
    pub rhs_exponent: u64,
    pub ln_lhs: f64,
    pub ln_rhs: f64,
    pub holds: bool,
}

pub fn sondow_inequality_check(t: &PrimeTable, n: u64, mu: &ExactRational) -> Result<SondowWitness> {
    sondow_inequality_check_budget(t, n, mu, DEFAULT_BIGINT_BUDGET_BITS)
}

pub fn sondow_inequality_check_budget(
    t: &PrimeTable,
    n: u64,
    mu: &ExactRational,
    budget_bits: u64,
) -> Result<SondowWitness> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    if !mu.is_positive() {
        return Err(Error::Domain(format!("mu must be positive, got {mu}")));
    }
    let p_next = t.nth_prime(n + 1)?;
    let primorial = product(t.primes()[..n as usize].iter().map(|&p| BigUint::from(p)));
    let too_big = || Error::Domain(format!("mu = {mu} has a numerator or denominator beyond u32"));
    let num = mu.numer().to_u32().ok_or_else(too_big)?;
    let den = u64::from(mu.denom().to_u32().ok_or_else(too_big)?);
    let rhs_exponent = 2 * u64::from(num);
    let rhs_bits = primorial.bits().saturating_mul(rhs_exponent);
    let lhs_bits = (64 - p_next.leading_zeros() as u64).saturating_mul(den);
    let need = rhs_bits.max(lhs_bits);
    if need > budget_bits {
        return Err(Error::ResourceLimit { what: "big-integer bits", requested: need, cap: budget_bits });
    }
    let lhs = BigUint::from(p_next).pow(den as u32);
    let rhs = primorial.pow(rhs_exponent as u32);
    Ok(SondowWitness {
        n,
        p_next,
        ln_lhs: den as f64 * (p_next as f64).ln(),
        ln_rhs: rhs_exponent as f64 * ln_biguint(&primorial),
        primorial,
        mu: mu.clone(),
        lhs_exponent: den,
        rhs_exponent,
        holds: lhs <= rhs,
    })
}
