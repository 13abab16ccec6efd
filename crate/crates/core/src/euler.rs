//! Partial Euler products p_N/q_N = prod_{p <= N} p^2/(p^2 - 1) for zeta(2).
//!
//! Every prime factor of p^2 - 1 = (p - 1)(p + 1) is at most (p + 1)/2, so the
//! reduced fraction is determined by one signed exponent per prime <= N. The
//! incremental builder updates that exponent vector once per prime step and
//! materialises numerator and denominator only on request.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{
    rational_exp_upper, zeta2_enclosure_capped, ExactRational, RealEnclosure, DEFAULT_DIGIT_CAP,
};
use crate::error::{Error, Result};
use crate::primes::PrimeTable;
use crate::product::{ln_biguint, product};
use crate::serde_dec;

/// Default cap on N for reports that materialise N! or (N!)^k.
pub const DEFAULT_FACTORIAL_CAP: u64 = 2000;

/// The exact reduced partial product for one N.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerApproximation {
    pub n: u64,
    pub value: ExactRational,
    /// Decimal digits of q_N.
    pub q_digits: usize,
}

impl EulerApproximation {
    pub fn p(&self) -> BigUint {
        self.value.numer().magnitude().clone()
    }

    pub fn q(&self) -> BigUint {
        self.value.denom().magnitude().clone()
    }
}

/// Running Euler product over the primes of a table.
#[derive(Clone, Debug)]
pub struct EulerProducts<'a> {
    table: &'a PrimeTable,
    /// Exponent of the i-th prime in p_N/q_N (negative: in the denominator).
    exponents: Vec<i32>,
    /// Number of primes absorbed so far.
    absorbed: usize,
    n: u64,
}

impl<'a> EulerProducts<'a> {
    pub fn new(table: &'a PrimeTable) -> Self {
        Self { table, exponents: Vec::new(), absorbed: 0, n: 0 }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Advances to `n`, absorbing every prime in `(self.n, n]`.
    pub fn advance_to(&mut self, n: u64) -> Result<()> {
        if n < self.n {
            return Err(Error::Domain(format!("cannot rewind Euler product from {} to {n}", self.n)));
        }
        if n > self.table.limit() {
            return Err(Error::Range(format!(
                "N = {n} exceeds the sieve limit {}",
                self.table.limit()
            )));
        }
        let primes = self.table.primes();
        while self.absorbed < primes.len() && u64::from(primes[self.absorbed]) <= n {
            let p = u64::from(primes[self.absorbed]);
            if self.exponents.len() > self.absorbed {
                self.exponents[self.absorbed] += 2;
            } else {
                self.exponents.push(2);
            }
            self.divide_out(p - 1);
            self.divide_out(p + 1);
            self.absorbed += 1;
        }
        self.n = n;
        Ok(())
    }

    /// Subtracts the factorisation of `m` from the exponent vector. Prime
    /// factors of `m` are absorbed primes, except 3 = 2 + 1.
    fn divide_out(&mut self, mut m: u64) {
        let primes = self.table.primes();
        for (i, &r) in primes[..self.absorbed].iter().enumerate() {
            let r = u64::from(r);
            if r * r > m {
                break;
            }
            while m.is_multiple_of(r) {
                m /= r;
                self.exponents[i] -= 1;
            }
        }
        if m > 1 {
            let idx = primes.binary_search(&(m as u32)).expect("cofactor of p^2 - 1 is a sieved prime");
            if idx >= self.exponents.len() {
                self.exponents.resize(idx + 1, 0);
            }
            self.exponents[idx] -= 1;
        }
    }

    /// Reduced numerator and denominator of the current product.
    pub fn fraction(&self) -> (BigUint, BigUint) {
        let primes = self.table.primes();
        let powers = |sign: i32| {
            product(
                self.exponents
                    .iter()
                    .zip(primes)
                    .filter(|&(&e, _)| e.signum() == sign)
                    .map(|(&e, &r)| BigUint::from(r).pow(e.unsigned_abs())),
            )
        };
        (powers(1), powers(-1))
    }

    pub fn approximation(&self) -> EulerApproximation {
        let (p, q) = self.fraction();
        let q_digits = q.to_string().len();
        let value = ExactRational::from_big_ratio(p, q).expect("q_N >= 1");
        EulerApproximation { n: self.n, value, q_digits }
    }

    /// q_N without forming p_N.
    pub fn denominator(&self) -> BigUint {
        self.fraction().1
    }
}

/// p_N/q_N in lowest terms; N < 2 gives the empty product 1/1.
pub fn euler_product(t: &PrimeTable, n: u64) -> Result<EulerApproximation> {
    let mut it = EulerProducts::new(t);
    it.advance_to(n)?;
    Ok(it.approximation())
}

/// Exact integers in the denominator chain for one N.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QBoundReport {
    pub n: u64,
    pub pi_n: u64,
    #[serde(with = "serde_dec::biguint")]
    pub q_n: BigUint,
    /// prod_{p <= N} (p^2 - 1).
    #[serde(with = "serde_dec::biguint")]
    pub prime_product: BigUint,
    /// N^(2 pi(N)).
    #[serde(with = "serde_dec::biguint")]
    pub power_bound: BigUint,
    /// (N!)^2.
    #[serde(with = "serde_dec::biguint")]
    pub factorial_squared: BigUint,
    pub q_le_prime_product: bool,
    pub prime_product_le_power: bool,
    pub q_le_factorial_squared: bool,
    pub q_divides_prime_product: bool,
}

impl QBoundReport {
    pub fn all_hold(&self) -> bool {
        self.q_le_prime_product
            && self.prime_product_le_power
            && self.q_le_factorial_squared
            && self.q_divides_prime_product
    }
}

pub(crate) fn factorial(n: u64) -> BigUint {
    product((2..=n).map(BigUint::from))
}

pub(crate) fn check_factorial_cap(n: u64, cap: u64) -> Result<()> {
    if n > cap {
        return Err(Error::ResourceLimit { what: "N (factorial cap)", requested: n, cap });
    }
    Ok(())
}

pub fn qn_bound_report(t: &PrimeTable, n: u64) -> Result<QBoundReport> {
    qn_bound_report_capped(t, n, DEFAULT_FACTORIAL_CAP)
}

pub fn qn_bound_report_capped(t: &PrimeTable, n: u64, cap: u64) -> Result<QBoundReport> {
    check_factorial_cap(n, cap)?;
    let q_n = euler_product(t, n)?.q();
    let primes: Vec<u64> = t.primes().iter().map(|&p| u64::from(p)).take_while(|&p| p <= n).collect();
    let pi_n = primes.len() as u64;
    let prime_product = product(primes.iter().map(|&p| BigUint::from(p * p - 1)));
    let power_bound = BigUint::from(n).pow(2 * pi_n as u32);
    let f = factorial(n);
    let factorial_squared = &f * &f;
    Ok(QBoundReport {
        n,
        pi_n,
        q_le_prime_product: q_n <= prime_product,
        prime_product_le_power: prime_product <= power_bound,
        q_le_factorial_squared: q_n <= factorial_squared,
        q_divides_prime_product: (&prime_product % &q_n).is_zero(),
        q_n,
        prime_product,
        power_bound,
        factorial_squared,
    })
}

/// Both tail bounds for a given f = f(N).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TailBounds {
    /// The coarse bound 10/f.
    pub coarse: ExactRational,
    /// zeta(2)_hi * (expU(1/f^2 + 1/f) - 1).
    pub sharp: ExactRational,
    /// min(coarse, sharp).
    pub bound: ExactRational,
}

/// Upper bound on |pi^2/6 - p_N/q_N| valid when no prime lies in (N, f].
///
/// With no primes in (N, f], the missing factor is a product over p > f,
/// bounded by exp(sum_{n > f} 1/(n-1)^2) <= exp(1/f^2 + 1/f). Since
/// p_N/q_N <= pi^2/6, the gap is at most zeta(2) * (that exponential - 1).
pub fn tail_bounds(f: &ExactRational) -> Result<TailBounds> {
    if f < &ExactRational::from_integer(2) {
        return Err(Error::Domain(format!("tail bound needs f >= 2, got {f}")));
    }
    let inv = f.recip()?;
    let x = &inv * &inv + &inv;
    let exp_upper = rational_exp_upper(&x)?;
    let zeta_hi = zeta2_enclosure_capped(15, DEFAULT_DIGIT_CAP)?.hi().clone();
    let sharp = zeta_hi * (exp_upper - ExactRational::one());
    let coarse = ExactRational::from_integer(10) * inv;
    let bound = std::cmp::min(&coarse, &sharp).clone();
    Ok(TailBounds { coarse, sharp, bound })
}

pub fn tail_product_upper(f: &ExactRational) -> Result<ExactRational> {
    Ok(tail_bounds(f)?.bound)
}

/// Distance from zeta(2) to p_N/q_N and the empirical exponent.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GapReport {
    pub n: u64,
    pub value: ExactRational,
    pub q_digits: usize,
    pub gap: RealEnclosure,
    /// -ln(gap midpoint) / ln(q_N); absent when q_N = 1.
    #[serde(with = "serde_dec::opt_f64_str")]
    pub exponent: Option<f64>,
    /// Digits of the zeta(2) enclosure that separated the gap from 0.
    pub digits_used: u32,
}

/// Encloses `|alpha - r|` for alpha in `x`, refining `x` by doubling the digit
/// count until the enclosure width is below its lower endpoint.
pub(crate) fn separated_gap(
    r: &ExactRational,
    digits: u32,
    digit_cap: u32,
    context: impl Fn() -> String,
) -> Result<(RealEnclosure, u32)> {
    let mut d = digits.max(1);
    loop {
        let z = zeta2_enclosure_capped(d, digit_cap)?;
        let gap = z.sub_rational(r).abs();
        if gap.lo().is_positive() && gap.width() < *gap.lo() {
            return Ok((gap, d));
        }
        if d >= digit_cap {
            return Err(Error::PrecisionExhausted { digits: d, context: context() });
        }
        d = d.saturating_mul(2).min(digit_cap);
    }
}

/// -ln(gap) / ln(q) using the gap midpoint.
pub(crate) fn exponent_of(gap: &RealEnclosure, q: &BigUint) -> Option<f64> {
    if q <= &BigUint::one() {
        return None;
    }
    Some(-gap.midpoint().ln_f64() / ln_biguint(q))
}

pub fn approximation_gap(t: &PrimeTable, n: u64, digits: u32) -> Result<GapReport> {
    approximation_gap_capped(t, n, digits, DEFAULT_DIGIT_CAP)
}

pub fn approximation_gap_capped(
    t: &PrimeTable,
    n: u64,
    digits: u32,
    digit_cap: u32,
) -> Result<GapReport> {
    let approx = euler_product(t, n)?;
    gap_report(approx, digits, digit_cap)
}

pub(crate) fn gap_report(approx: EulerApproximation, digits: u32, digit_cap: u32) -> Result<GapReport> {
    let (gap, digits_used) = separated_gap(&approx.value, digits, digit_cap, || {
        format!("gap at N = {} not separated from zero", approx.n)
    })?;
    let exponent = exponent_of(&gap, &approx.q());
    Ok(GapReport {
        n: approx.n,
        value: approx.value,
        q_digits: approx.q_digits,
        gap,
        exponent,
        digits_used,
    })
}
