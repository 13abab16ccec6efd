//! Exact rationals and rigorous enclosures of real constants.
//!
//! [`ExactRational`] is a reduced fraction of arbitrary-precision integers.
//! [`RealEnclosure`] brackets a real number between two exact rationals;
//! [`zeta2_enclosure`] produces such a bracket for zeta(2) = pi^2/6 from
//! Machin's formula, with every truncation and rounding error accounted for.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::product::ln_biguint;

/// Default cap on the number of decimal digits [`zeta2_enclosure`] accepts.
pub const DEFAULT_DIGIT_CAP: u32 = 10_000;

/// Extra decimal places carried through the fixed-point kernel.
pub const GUARD_DIGITS: u32 = 10;

/// A fraction in lowest terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(numerator: BigInt, denominator: BigInt) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        Ok(Self(BigRational::new(numerator, denominator)))
    }

    pub fn from_integer<T: Into<BigInt>>(n: T) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    /// Convenience constructor for small fractions. Panics on a zero denominator.
    pub fn from_ratio(numerator: i64, denominator: i64) -> Self {
        assert!(denominator != 0, "zero denominator");
        Self(BigRational::new(numerator.into(), denominator.into()))
    }

    pub fn from_big_ratio(numerator: BigUint, denominator: BigUint) -> Result<Self> {
        Self::new(
            BigInt::from_biguint(Sign::Plus, numerator),
            BigInt::from_biguint(Sign::Plus, denominator),
        )
    }

    /// Parses an exact decimal literal such as `5.45` or `-0.125`.
    pub fn from_decimal_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let (negative, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text.strip_prefix('+').unwrap_or(text)),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if (int_part.is_empty() && frac_part.is_empty())
            || !int_part.bytes().all(|b| b.is_ascii_digit())
            || !frac_part.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(Error::Parse(format!("not a decimal literal: {text:?}")));
        }
        let digits = format!("{int_part}{frac_part}");
        let mut numerator = BigInt::from_str(&digits).map_err(|e| Error::Parse(e.to_string()))?;
        if negative {
            numerator = -numerator;
        }
        let denominator = BigInt::from(10u32).pow(frac_part.len() as u32);
        Self::new(numerator, denominator)
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("reciprocal of zero".into()));
        }
        Ok(Self(self.0.recip()))
    }

    pub fn pow(&self, exp: i32) -> Self {
        Self(self.0.pow(exp))
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }

    /// Nearest f64; saturates to +-inf or 0 when out of range.
    pub fn to_f64(&self) -> f64 {
        if let Some(v) = self.0.to_f64() {
            if v.is_finite() && (v != 0.0 || self.is_zero()) {
                return v;
            }
        }
        let sign = if self.is_negative() { -1.0 } else { 1.0 };
        sign * self.abs().ln_f64().exp()
    }

    /// Natural logarithm of a positive rational in machine precision. Works
    /// for numerators and denominators far outside the f64 range.
    pub fn ln_f64(&self) -> f64 {
        debug_assert!(self.is_positive());
        let n = self.numer().magnitude();
        let d = self.denom().magnitude();
        if n.bits() <= 1000 && d.bits() <= 1000 {
            if let Some(v) = self.0.to_f64() {
                if v.is_normal() {
                    return v.ln();
                }
            }
        }
        ln_biguint(n) - ln_biguint(d)
    }

    /// Rounds down onto the grid 1/scale.
    pub fn floor_to_scale(&self, scale: &BigInt) -> Self {
        let scaled = (&self.0 * BigRational::from_integer(scale.clone())).floor();
        Self(scaled / BigRational::from_integer(scale.clone()))
    }

    /// Rounds up onto the grid 1/scale.
    pub fn ceil_to_scale(&self, scale: &BigInt) -> Self {
        let scaled = (&self.0 * BigRational::from_integer(scale.clone())).ceil();
        Self(scaled / BigRational::from_integer(scale.clone()))
    }

    /// Decimal expansion truncated toward zero after `places` digits.
    pub fn to_decimal_string(&self, places: u32) -> String {
        let scale = BigInt::from(10u32).pow(places);
        let scaled = (&self.0 * BigRational::from_integer(scale.clone())).trunc().to_integer();
        let negative = scaled.is_negative() || (scaled.is_zero() && self.is_negative());
        let (int_part, frac_part) = scaled.abs().div_rem(&scale);
        let sign = if negative { "-" } else { "" };
        if places == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = places as usize)
        }
    }
}

impl From<BigRational> for ExactRational {
    fn from(value: BigRational) -> Self {
        Self(value)
    }
}

impl From<i64> for ExactRational {
    fn from(value: i64) -> Self {
        Self::from_integer(value)
    }
}

impl From<BigUint> for ExactRational {
    fn from(value: BigUint) -> Self {
        Self::from_integer(BigInt::from_biguint(Sign::Plus, value))
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for ExactRational {
    type Err = Error;

    /// Accepts `n/d`, a bare integer, or a decimal literal.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some((n, d)) = text.split_once('/') {
            let n = BigInt::from_str(n.trim()).map_err(|e| Error::Parse(e.to_string()))?;
            let d = BigInt::from_str(d.trim()).map_err(|e| Error::Parse(e.to_string()))?;
            return Self::new(n, d);
        }
        Self::from_decimal_str(text)
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(D::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational(self.0.$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Division by zero panics, as for the underlying ratio type.
forward_binop!(Div, div);

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-&self.0)
    }
}

/// A closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealEnclosure {
    lo: ExactRational,
    hi: ExactRational,
}

/// Where a rational lies relative to an enclosure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Position {
    /// The rational is strictly below the lower endpoint.
    Below,
    /// The rational is strictly above the upper endpoint.
    Above,
    Overlapping,
}

impl RealEnclosure {
    pub fn new(lo: ExactRational, hi: ExactRational) -> Result<Self> {
        if lo > hi {
            return Err(Error::Domain(format!("enclosure with lo {lo} > hi {hi}")));
        }
        Ok(Self { lo, hi })
    }

    pub fn point(x: ExactRational) -> Self {
        Self { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &ExactRational {
        &self.lo
    }

    pub fn hi(&self) -> &ExactRational {
        &self.hi
    }

    pub fn width(&self) -> ExactRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> ExactRational {
        (&self.lo + &self.hi) / ExactRational::from_integer(2)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, r: &ExactRational) -> bool {
        enclosure_compare(self, r) == Position::Overlapping
    }

    /// True when `other` lies inside `self`.
    pub fn contains_enclosure(&self, other: &RealEnclosure) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn overlaps(&self, other: &RealEnclosure) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Enclosure of `x - r` for every x in `self`.
    pub fn sub_rational(&self, r: &ExactRational) -> Self {
        Self { lo: &self.lo - r, hi: &self.hi - r }
    }

    /// Enclosure of `|x|` for every x in `self`.
    pub fn abs(&self) -> Self {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            Self { lo: self.hi.abs(), hi: self.lo.abs() }
        } else {
            let hi = std::cmp::max(self.lo.abs(), self.hi.clone());
            Self { lo: ExactRational::zero(), hi }
        }
    }
}

impl fmt::Display for RealEnclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Locates `r` relative to `x`: `Below` iff `r < x.lo`, `Above` iff `r > x.hi`.
pub fn enclosure_compare(x: &RealEnclosure, r: &ExactRational) -> Position {
    if r < &x.lo {
        Position::Below
    } else if r > &x.hi {
        Position::Above
    } else {
        Position::Overlapping
    }
}

/// Rational upper bound for `exp(x)` on `0 <= x <= 1`, namely `1 + x + x^2`.
///
/// The Taylor tail satisfies `x^2 (1/2! + x/3! + ...) <= x^2 (e - 2) <= x^2`
/// on this interval.
pub fn rational_exp_upper(x: &ExactRational) -> Result<ExactRational> {
    if x.is_negative() || x > &ExactRational::one() {
        return Err(Error::Domain(format!("exp upper bound needs 0 <= x <= 1, got {x}")));
    }
    Ok(ExactRational::one() + x + x * x)
}

/// Fixed-point value `S * arctan(1/x)` together with an absolute error bound
/// in units of the last place.
struct ScaledArctan {
    value: BigInt,
    err_ulps: u64,
}

/// Sums the alternating arctan series at scale `S`. Each computed term is
/// `floor(floor(S / x^(2k+1)) / (2k+1))`, which undershoots the true term by
/// less than 2 ulps; the loop stops once `floor(S / x^(2k+1))` is zero, so the
/// first omitted term (and hence the alternating remainder) is below 1 ulp.
fn arctan_recip_scaled(x: u32, scale: &BigUint) -> ScaledArctan {
    let x_sq = BigUint::from(x) * x;
    let mut power = scale / x;
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    while !power.is_zero() {
        let term = BigInt::from_biguint(Sign::Plus, &power / (2 * k + 1));
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x_sq;
        k += 1;
    }
    ScaledArctan { value: sum, err_ulps: 2 * k + 1 }
}

/// Bracket of pi at scale 10^places: returns (lo, hi) scaled integers.
fn pi_scaled_bounds(places: u32) -> (BigInt, BigInt, BigUint) {
    let scale = BigUint::from(10u32).pow(places);
    let a5 = arctan_recip_scaled(5, &scale);
    let a239 = arctan_recip_scaled(239, &scale);
    // pi = 16 atan(1/5) - 4 atan(1/239)
    let centre = a5.value * 16 - a239.value * 4;
    let err = BigInt::from(16 * a5.err_ulps + 4 * a239.err_ulps);
    (&centre - &err, centre + err, scale)
}

/// Rigorous enclosure of pi, width at most about `10^-places` times a small factor.
pub fn pi_enclosure(places: u32) -> RealEnclosure {
    let (lo, hi, scale) = pi_scaled_bounds(places);
    let scale = BigInt::from_biguint(Sign::Plus, scale);
    RealEnclosure {
        lo: ExactRational(BigRational::new(lo, scale.clone())),
        hi: ExactRational(BigRational::new(hi, scale)),
    }
}

/// Enclosure of zeta(2) = pi^2/6 with width at most `10^-digits`, using the
/// default digit cap.
pub fn zeta2_enclosure(digits: u32) -> Result<RealEnclosure> {
    zeta2_enclosure_capped(digits, DEFAULT_DIGIT_CAP)
}

pub fn zeta2_enclosure_capped(digits: u32, digit_cap: u32) -> Result<RealEnclosure> {
    if digits == 0 {
        return Err(Error::Domain("digits must be at least 1".into()));
    }
    if digits > digit_cap {
        return Err(Error::ResourceLimit {
            what: "digits",
            requested: digits.into(),
            cap: digit_cap.into(),
        });
    }
    let target = BigInt::from(10u32).pow(digits);
    let mut guard = GUARD_DIGITS;
    loop {
        let places = digits + guard;
        let (pi_lo, pi_hi, scale) = pi_scaled_bounds(places);
        debug_assert!(pi_lo.is_positive());
        let scale = BigInt::from_biguint(Sign::Plus, scale);
        let denom: BigInt = &scale * &scale * 6u32;
        // pi^2/6 is monotone in pi on the positive axis.
        let lo = ExactRational(BigRational::new(&pi_lo * &pi_lo, denom.clone()))
            .floor_to_scale(&scale);
        let hi = ExactRational(BigRational::new(&pi_hi * &pi_hi, denom)).ceil_to_scale(&scale);
        let enclosure = RealEnclosure { lo, hi };
        if enclosure.width() * ExactRational::from_integer(target.clone()) <= ExactRational::one() {
            return Ok(enclosure);
        }
        guard += GUARD_DIGITS;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// S_N = sum_{n <= N} 1/n^2, exact.
    fn basel_partial_sum(n_max: u32) -> ExactRational {
        (1..=n_max).fold(ExactRational::zero(), |acc, n| {
            acc + ExactRational::from_ratio(1, i64::from(n) * i64::from(n))
        })
    }

    /// Lower Taylor polynomial of exp, which never exceeds exp(x) for x >= 0.
    fn exp_taylor_lower(x: &ExactRational, terms: u32) -> ExactRational {
        let mut term = ExactRational::one();
        let mut sum = ExactRational::one();
        for k in 1..=terms {
            term = term * x / ExactRational::from_integer(i64::from(k));
            sum = sum + &term;
        }
        sum
    }

    #[test]
    fn display_and_parse() {
        let r = ExactRational::from_ratio(6, -8);
        assert_eq!(r.to_string(), "-3/4");
        assert_eq!("-3/4".parse::<ExactRational>().unwrap(), r);
        assert_eq!("5.45".parse::<ExactRational>().unwrap(), ExactRational::from_ratio(109, 20));
        assert_eq!("7".parse::<ExactRational>().unwrap().to_string(), "7/1");
        assert!("1/0".parse::<ExactRational>().is_err());
        assert!("abc".parse::<ExactRational>().is_err());
        assert!(".".parse::<ExactRational>().is_err());
    }

    #[test]
    fn decimal_rendering() {
        let r = ExactRational::from_ratio(1225, 768);
        assert_eq!(r.to_decimal_string(6), "1.595052");
        assert_eq!(ExactRational::from_ratio(-1, 8).to_decimal_string(2), "-0.12");
    }

    #[test]
    fn ln_of_large_rational() {
        let n = BigUint::from(7u32).pow(900);
        let d = BigUint::from(2u32).pow(3000);
        let r = ExactRational::from_big_ratio(n, d).unwrap();
        let expect = 900.0 * 7f64.ln() - 3000.0 * 2f64.ln();
        assert!((r.ln_f64() - expect).abs() < 1e-9);
    }

    #[test]
    fn compare_examples() {
        let x = RealEnclosure::new(ExactRational::from_ratio(3, 2), ExactRational::from_ratio(5, 3))
            .unwrap();
        assert_eq!(enclosure_compare(&x, &ExactRational::from_integer(1)), Position::Below);
        assert_eq!(enclosure_compare(&x, &ExactRational::from_integer(2)), Position::Above);
        assert_eq!(enclosure_compare(&x, &ExactRational::from_ratio(8, 5)), Position::Overlapping);
        assert_eq!(enclosure_compare(&x, &ExactRational::from_ratio(3, 2)), Position::Overlapping);
    }

    #[test]
    fn inverted_enclosure_rejected() {
        assert!(RealEnclosure::new(ExactRational::one(), ExactRational::zero()).is_err());
    }

    #[test]
    fn exp_upper_examples() {
        assert_eq!(rational_exp_upper(&ExactRational::zero()).unwrap(), ExactRational::one());
        let half = rational_exp_upper(&ExactRational::from_ratio(1, 2)).unwrap();
        assert_eq!(half, ExactRational::from_ratio(7, 4));
        assert!(half.to_f64() >= 0.5f64.exp());
        let one = rational_exp_upper(&ExactRational::one()).unwrap();
        assert_eq!(one, ExactRational::from_integer(3));
        assert!(one.to_f64() >= std::f64::consts::E);
    }

    #[test]
    fn exp_upper_domain() {
        assert!(matches!(
            rational_exp_upper(&ExactRational::from_ratio(-1, 10)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            rational_exp_upper(&ExactRational::from_ratio(11, 10)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn exp_upper_dominates_taylor_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        let mut prev: Option<(ExactRational, ExactRational)> = None;
        for _ in 0..100 {
            let den: i64 = rng.random_range(1..=10_000);
            let num: i64 = rng.random_range(0..=den);
            let x = ExactRational::from_ratio(num, den);
            let upper = rational_exp_upper(&x).unwrap();
            assert!(upper >= exp_taylor_lower(&x, 25), "x = {x}");
            if let Some((px, pu)) = &prev {
                if px <= &x {
                    assert!(pu <= &upper);
                }
            }
            prev = Some((x, upper));
        }
    }

    #[test]
    fn zeta2_two_digits() {
        let z = zeta2_enclosure(2).unwrap();
        assert!(z.lo() >= &ExactRational::from_ratio(164, 100));
        assert!(z.hi() <= &ExactRational::from_ratio(165, 100));
    }

    #[test]
    fn zeta2_one_digit_contains_basel_constant() {
        let z = zeta2_enclosure(1).unwrap();
        let approx = ExactRational::from_decimal_str("1.6449").unwrap();
        let approx_hi = ExactRational::from_decimal_str("1.6450").unwrap();
        assert!(z.lo() <= &approx_hi && z.hi() >= &approx);
        assert!(z.width() <= ExactRational::from_ratio(1, 10));
    }

    #[test]
    fn zeta2_consistent_with_partial_sum_sandwich() {
        let s = basel_partial_sum(1000);
        let lower = &s + &ExactRational::from_ratio(1, 1001);
        let upper = &s + &ExactRational::from_ratio(1, 1000);
        let z = zeta2_enclosure(30).unwrap();
        assert!(&lower < z.hi());
        assert!(&upper > z.lo());
        // The enclosure is far tighter than the sandwich, so it lies inside it.
        assert!(&lower < z.lo() && z.hi() < &upper);
    }

    #[test]
    fn zeta2_known_digits() {
        let z = zeta2_enclosure(40).unwrap();
        let text = z.lo().to_decimal_string(38);
        assert_eq!(text, "1.64493406684822643647241516664602518921");
    }

    #[test]
    fn zeta2_caps() {
        assert!(matches!(zeta2_enclosure(0), Err(Error::Domain(_))));
        assert!(matches!(zeta2_enclosure(10_001), Err(Error::ResourceLimit { .. })));
        assert!(matches!(zeta2_enclosure_capped(50, 40), Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn zeta2_refinement_nests() {
        for d in [1u32, 5, 17, 40] {
            let coarse = zeta2_enclosure(d).unwrap();
            let fine = zeta2_enclosure(d + 10).unwrap();
            assert!(coarse.overlaps(&fine));
            let slack = ExactRational::from_integer(BigInt::from(10u32).pow(d)).recip().unwrap();
            assert!(fine.lo() >= &(coarse.lo() - &slack));
            assert!(fine.hi() <= &(coarse.hi() + &slack));
        }
    }

    #[test]
    fn pi_bracket() {
        let p = pi_enclosure(30);
        let pi_lo = ExactRational::from_decimal_str("3.14159265358979323846264338327").unwrap();
        let pi_hi = ExactRational::from_decimal_str("3.14159265358979323846264338328").unwrap();
        assert!(p.lo() <= &pi_hi && p.hi() >= &pi_lo);
    }

    #[test]
    fn enclosure_abs_and_sub() {
        let x = RealEnclosure::new(ExactRational::from_ratio(-1, 2), ExactRational::from_ratio(1, 3))
            .unwrap();
        let a = x.abs();
        assert_eq!(a.lo(), &ExactRational::zero());
        assert_eq!(a.hi(), &ExactRational::from_ratio(1, 2));
        let y = x.sub_rational(&ExactRational::one());
        let b = y.abs();
        assert_eq!(b.lo(), &ExactRational::from_ratio(2, 3));
        assert_eq!(b.hi(), &ExactRational::from_ratio(3, 2));
    }

    #[test]
    fn serde_roundtrip() {
        let z = zeta2_enclosure(5).unwrap();
        let json = serde_json::to_string(&z).unwrap();
        assert!(json.starts_with("{\"lo\":\""));
        let back: RealEnclosure = serde_json::from_str(&json).unwrap();
        assert_eq!(back, z);
    }

    proptest! {
        #[test]
        fn zeta2_is_well_formed(d in 1u32..200) {
            let z = zeta2_enclosure(d).unwrap();
            prop_assert!(z.lo() <= z.hi());
            let target = ExactRational::from_integer(BigInt::from(10u32).pow(d));
            prop_assert!(z.width() * target <= ExactRational::one());
        }

        #[test]
        fn rational_text_roundtrip(n in any::<i64>(), d in 1i64..i64::MAX) {
            let r = ExactRational::from_ratio(n, d);
            prop_assert_eq!(r.to_string().parse::<ExactRational>().unwrap(), r);
        }
    }
}
