//! Unsigned Q32.96 fixed point in a u128, used as an independent
//! higher-precision check of the a_{n+1} = a_n + ln a_n recursion.

const FRAC_BITS: u32 = 96;
const ONE: u128 = 1 << FRAC_BITS;
const LOW64: u128 = (1 << 64) - 1;

/// floor(ln 2 * 2^96).
const LN2: u128 = 0xb172_17f7_d1cf_79ab_c9e3_b398;
/// floor(e * 2^96).
pub(crate) const E: Fixed = Fixed(0x2_b7e1_5162_8aed_2a6a_bf71_5880);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct Fixed(u128);

/// Full 256-bit product as (high, low) halves.
fn mul_wide(a: u128, b: u128) -> (u128, u128) {
    let (a1, a0) = (a >> 64, a & LOW64);
    let (b1, b0) = (b >> 64, b & LOW64);
    let p00 = a0 * b0;
    let p01 = a0 * b1;
    let p10 = a1 * b0;
    let p11 = a1 * b1;
    let mid = (p00 >> 64) + (p01 & LOW64) + (p10 & LOW64);
    let lo = (p00 & LOW64) | ((mid & LOW64) << 64);
    let hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
    (hi, lo)
}

/// (a * b) >> 96, truncated. The result must fit in 128 bits.
fn mul_shift(a: u128, b: u128) -> u128 {
    let (hi, lo) = mul_wide(a, b);
    debug_assert!(hi >> FRAC_BITS == 0, "fixed-point product overflow");
    (hi << (128 - FRAC_BITS)) | (lo >> FRAC_BITS)
}

impl Fixed {
    pub(crate) fn to_f64(self) -> f64 {
        let int = (self.0 >> FRAC_BITS) as f64;
        let frac = (self.0 & (ONE - 1)) as f64 / ONE as f64;
        int + frac
    }

    pub(crate) fn add(self, other: Fixed) -> Fixed {
        Fixed(self.0 + other.0)
    }

    /// Natural log for values >= 1, by the binary-digit squaring method.
    pub(crate) fn ln(self) -> Fixed {
        assert!(self.0 >= ONE, "fixed ln needs x >= 1");
        let top = 127 - self.0.leading_zeros();
        let k = top - FRAC_BITS;
        let mut m = self.0 >> k;
        let mut frac: u128 = 0;
        for i in 1..=FRAC_BITS {
            m = mul_shift(m, m);
            if m >= 2 * ONE {
                m >>= 1;
                frac |= 1 << (FRAC_BITS - i);
            }
        }
        let log2 = (u128::from(k) << FRAC_BITS) + frac;
        Fixed(mul_shift(log2, LN2))
    }

    #[cfg(test)]
    pub(crate) fn from_int(n: u32) -> Fixed {
        Fixed(u128::from(n) << FRAC_BITS)
    }
}
