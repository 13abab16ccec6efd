use num_bigint::BigUint;
use num_traits::One;

/// Balanced product tree; keeps multiplications between operands of similar size.
pub(crate) fn product<I: IntoIterator<Item = BigUint>>(factors: I) -> BigUint {
    let mut layer: Vec<BigUint> = factors.into_iter().collect();
    if layer.is_empty() {
        return BigUint::one();
    }
    while layer.len() > 1 {
        let mut next = Vec::with_capacity(layer.len().div_ceil(2));
        let mut it = layer.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(a * b),
                None => next.push(a),
            }
        }
        layer = next;
    }
    layer.pop().unwrap_or_else(BigUint::one)
}

/// Natural log of a positive big integer, valid far beyond the f64 range.
pub(crate) fn ln_biguint(n: &BigUint) -> f64 {
    use num_traits::ToPrimitive;
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_f64().map_or(f64::INFINITY, f64::ln);
    }
    let shift = bits - 64;
    let top = (n >> shift).to_f64().unwrap_or(f64::INFINITY);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_matches_fold() {
        let xs: Vec<BigUint> = (1u32..=30).map(BigUint::from).collect();
        let folded = xs.iter().fold(BigUint::one(), |acc, x| acc * x);
        assert_eq!(product(xs), folded);
        assert_eq!(product(Vec::new()), BigUint::one());
    }

    #[test]
    fn ln_of_huge_integer() {
        let n = BigUint::from(3u32).pow(5000);
        let expect = 5000.0 * 3f64.ln();
        assert!((ln_biguint(&n) - expect).abs() / expect < 1e-12);
        assert!((ln_biguint(&BigUint::from(1000u32)) - 1000f64.ln()).abs() < 1e-12);
    }
}
