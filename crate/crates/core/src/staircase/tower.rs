//! Numbers written as exp applied `level` times to a machine-precision mantissa.
//!
//! Normalised towers keep the mantissa in `[1, e)` at every level >= 1, so for
//! two such towers the level alone decides the order. Level 0 holds any real.
//! Arithmetic on towers is approximate once the represented value leaves the
//! f64 range: lower-order terms are dropped when they fall below the mantissa
//! precision.

use std::cmp::Ordering;
use std::f64::consts::E;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest x with exp(x) finite in f64, rounded down.
const EXP_MAX_ARG: f64 = 709.0;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LogTower {
    level: u32,
    mantissa: f64,
}

/// Brings `(k, r)` to normal form: raise the level while `r >= e`, lower it
/// while `r < 1`. Level-0 values are left as they are.
pub fn tower_normalize(k: u32, r: f64) -> Result<LogTower> {
    if !r.is_finite() {
        return Err(Error::Domain(format!("tower mantissa must be finite, got {r}")));
    }
    if k >= 1 && r <= 0.0 {
        return Err(Error::Domain(format!("tower mantissa must be positive at level {k}, got {r}")));
    }
    let (mut k, mut r) = (k, r);
    while k >= 1 && r >= E {
        r = r.ln();
        k += 1;
    }
    while k >= 1 && r < 1.0 {
        r = r.exp();
        k -= 1;
    }
    Ok(LogTower { level: k, mantissa: r })
}

/// Total order on normalised towers.
///
/// Both levels >= 1: the level decides, then the mantissa. Against a level-0
/// value the other tower is evaluated in f64 (overflow counts as larger); two
/// values closer than f64 resolution after that evaluation compare by the
/// rounded result.
pub fn tower_compare(x: &LogTower, y: &LogTower) -> Ordering {
    match (x.level, y.level) {
        (0, 0) => x.mantissa.total_cmp(&y.mantissa),
        (0, _) => x.mantissa.total_cmp(&y.value_f64()),
        (_, 0) => x.value_f64().total_cmp(&y.mantissa),
        (a, b) if a != b => a.cmp(&b),
        _ => x.mantissa.total_cmp(&y.mantissa),
    }
}

impl LogTower {
    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn mantissa(&self) -> f64 {
        self.mantissa
    }

    pub fn from_f64(x: f64) -> Result<Self> {
        tower_normalize(0, x)
    }

    /// The tower for exp(ln_value).
    pub fn from_ln(ln_value: f64) -> Result<Self> {
        if ln_value.is_nan() || ln_value == f64::INFINITY {
            return Err(Error::Domain(format!("cannot build a tower from ln = {ln_value}")));
        }
        if ln_value < EXP_MAX_ARG {
            return tower_normalize(0, ln_value.exp());
        }
        tower_normalize(1, ln_value)
    }

    /// The represented value in f64, `inf` when it overflows.
    pub fn value_f64(&self) -> f64 {
        let mut v = self.mantissa;
        for _ in 0..self.level {
            if v > EXP_MAX_ARG + 1.0 {
                return f64::INFINITY;
            }
            v = v.exp();
        }
        v
    }

    /// Natural log of the represented value, when finite in f64.
    pub fn ln_f64(&self) -> Option<f64> {
        if self.level == 0 {
            return (self.mantissa > 0.0).then(|| self.mantissa.ln());
        }
        let inner = LogTower { level: self.level - 1, mantissa: self.mantissa }.value_f64();
        inner.is_finite().then_some(inner)
    }

    /// ln of the value as a tower. Fails for nonpositive values.
    pub fn ln(&self) -> Result<Self> {
        if self.level == 0 {
            if self.mantissa <= 0.0 {
                return Err(Error::Domain(format!("ln of nonpositive value {}", self.mantissa)));
            }
            return tower_normalize(0, self.mantissa.ln());
        }
        Ok(LogTower { level: self.level - 1, mantissa: self.mantissa })
    }

    /// exp of the value as a tower.
    pub fn exp(&self) -> Result<Self> {
        let v = self.value_f64();
        if v < EXP_MAX_ARG {
            return tower_normalize(0, v.exp());
        }
        tower_normalize(self.level + 1, self.mantissa)
    }

    /// value + s. Exact in f64 range; above it `s` is below the resolution.
    pub fn add_scalar(&self, s: f64) -> Result<Self> {
        let v = self.value_f64();
        if v.is_finite() && (v + s).is_finite() {
            return tower_normalize(0, v + s);
        }
        Ok(*self)
    }

    /// value * c for c > 0.
    pub fn mul_scalar(&self, c: f64) -> Result<Self> {
        if !(c > 0.0) {
            return Err(Error::Domain(format!("scale factor must be positive, got {c}")));
        }
        let v = self.value_f64();
        if v.is_finite() && (v * c).is_finite() {
            return tower_normalize(0, v * c);
        }
        self.ln()?.add_scalar(c.ln())?.exp()
    }

    /// Product of two positive towers.
    pub fn mul(&self, other: &LogTower) -> Result<Self> {
        let (a, b) = (self.value_f64(), other.value_f64());
        if a.is_finite() && b.is_finite() && (a * b).is_finite() {
            return tower_normalize(0, a * b);
        }
        self.ln()?.add(&other.ln()?)?.exp()
    }

    /// Sum of two towers; when the values are out of f64 range the larger
    /// term is returned (the smaller is below the resolution or, at worst,
    /// contributes a factor of two).
    pub fn add(&self, other: &LogTower) -> Result<Self> {
        let (a, b) = (self.value_f64(), other.value_f64());
        if a.is_finite() && b.is_finite() && (a + b).is_finite() {
            return tower_normalize(0, a + b);
        }
        Ok(match tower_compare(self, other) {
            Ordering::Less => *other,
            _ => *self,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn normalize_examples() {
        let t = tower_normalize(0, 5.0).unwrap();
        assert_eq!((t.level(), t.mantissa()), (0, 5.0));
        let t = tower_normalize(1, 5.0).unwrap();
        assert_eq!(t.level(), 2);
        assert!((t.mantissa() - 5f64.ln()).abs() < 1e-15);
        assert!((t.mantissa() - 1.609).abs() < 1e-3);
        let t = tower_normalize(2, 1.0).unwrap();
        assert_eq!((t.level(), t.mantissa()), (2, 1.0));
        assert!((t.value_f64() - 15.154).abs() < 1e-3);
        let t = tower_normalize(2, 0.5).unwrap();
        assert_eq!(t.level(), 1);
        assert!(matches!(tower_normalize(1, -1.0), Err(Error::Domain(_))));
        assert!(matches!(tower_normalize(0, f64::NAN), Err(Error::Domain(_))));
    }

    #[test]
    fn compare_examples() {
        let a = tower_normalize(0, 5.0).unwrap();
        let b = tower_normalize(2, 1.0).unwrap();
        assert_eq!(tower_compare(&a, &b), Ordering::Less);
        let c = tower_normalize(3, 1.2).unwrap();
        let d = tower_normalize(2, 2.5).unwrap();
        assert_eq!(tower_compare(&c, &d), Ordering::Greater);
        assert_eq!(tower_compare(&c, &c), Ordering::Equal);
        let huge = tower_normalize(7, 1.1).unwrap();
        assert_eq!(tower_compare(&tower_normalize(0, 1e300).unwrap(), &huge), Ordering::Less);
    }

    #[test]
    fn ln_and_from_ln() {
        let t = LogTower::from_ln(1000.0).unwrap();
        assert!((t.ln_f64().unwrap() - 1000.0).abs() < 1e-12);
        let small = LogTower::from_ln(2.0).unwrap();
        assert_eq!(small.level(), 0);
        assert!((small.ln_f64().unwrap() - 2.0).abs() < 1e-14);
        assert!(LogTower::from_ln(f64::NAN).is_err());
        assert!(tower_normalize(0, -2.0).unwrap().ln().is_err());
    }

    #[test]
    fn arithmetic_in_range() {
        let a = LogTower::from_f64(3.0).unwrap();
        let b = LogTower::from_f64(4.0).unwrap();
        assert_eq!(a.mul(&b).unwrap().value_f64(), 12.0);
        assert_eq!(a.add(&b).unwrap().value_f64(), 7.0);
        assert_eq!(a.mul_scalar(2.0).unwrap().value_f64(), 6.0);
        assert_eq!(a.add_scalar(-1.0).unwrap().value_f64(), 2.0);
        assert!((a.exp().unwrap().value_f64() - 3f64.exp()).abs() < 1e-12);
    }

    #[test]
    fn arithmetic_beyond_range() {
        // exp(1000) * exp(1000) = exp(2000)
        let x = LogTower::from_ln(1000.0).unwrap();
        let sq = x.mul(&x).unwrap();
        assert!((sq.ln_f64().unwrap() - 2000.0).abs() < 1e-9);
        let scaled = x.mul_scalar(std::f64::consts::E).unwrap();
        assert!((scaled.ln_f64().unwrap() - 1001.0).abs() < 1e-9);
        assert_eq!(x.add(&LogTower::from_f64(5.0).unwrap()).unwrap(), x);
        assert!(x.mul_scalar(0.0).is_err());
    }

    #[test]
    fn compare_is_total_order_on_sample() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let towers: Vec<LogTower> = (0..1000)
            .map(|_| {
                let level = rng.random_range(0..=5u32);
                let r = if level == 0 { rng.random_range(-50.0..1e6) } else { rng.random_range(1.0..E) };
                tower_normalize(level, r).unwrap()
            })
            .collect();
        for i in 0..towers.len() {
            let j = (i * 7 + 3) % towers.len();
            let k = (i * 13 + 5) % towers.len();
            let (a, b, c) = (&towers[i], &towers[j], &towers[k]);
            assert_eq!(tower_compare(a, b), tower_compare(b, a).reverse());
            if tower_compare(a, b) != Ordering::Greater && tower_compare(b, c) != Ordering::Greater {
                assert_ne!(tower_compare(a, c), Ordering::Greater);
            }
        }
    }

    proptest! {
        #[test]
        fn normalized_mantissa_in_range(k in 1u32..6, r in 0.001f64..1e6) {
            let t = tower_normalize(k, r).unwrap();
            if t.level() >= 1 {
                prop_assert!(t.mantissa() >= 1.0 && t.mantissa() < E);
            }
        }

        #[test]
        fn normalization_preserves_value(r in 0.01f64..50.0) {
            let t = tower_normalize(1, r).unwrap();
            let v = t.value_f64();
            prop_assert!((v - r.exp()).abs() <= 1e-9 * r.exp());
        }
    }
}
