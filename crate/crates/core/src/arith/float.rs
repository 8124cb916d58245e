use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use super::ExactRational;

/// Natural log of a positive magnitude from its top 64 bits and exact bit length.
fn ln_biguint(n: &BigUint) -> f64 {
    if n.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = n.bits();
    if bits <= 64 {
        return n.to_u64().unwrap_or(0).to_f64().unwrap_or(0.0).ln();
    }
    let shift = bits - 64;
    let top = (n >> shift).to_u64().unwrap_or(0) as f64;
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `ln |n|`; `-inf` for zero.
pub fn ln_abs(n: &BigInt) -> f64 {
    ln_biguint(n.magnitude())
}

/// `ln |q|`; `-inf` for zero.
pub fn ln_rational(q: &ExactRational) -> f64 {
    ln_abs(q.numer()) - ln_abs(q.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_f64_for_small_values() {
        for n in [1u64, 2, 10, 5234, 28187351, u64::MAX] {
            let got = ln_abs(&BigInt::from(n));
            assert!((got - (n as f64).ln()).abs() < 1e-12, "{n}");
        }
        assert_eq!(ln_abs(&BigInt::from(0)), f64::NEG_INFINITY);
    }

    #[test]
    fn large_values_relative_accuracy() {
        // ln(10^300) = 300 ln 10
        let n = BigInt::from(10).pow(300);
        let expected = 300.0 * 10f64.ln();
        assert!(((ln_abs(&n) - expected) / expected).abs() < 1e-12);
        let q = ExactRational::new(BigInt::from(10).pow(400), BigInt::from(10).pow(398));
        assert!((ln_rational(&q) - 2.0 * 10f64.ln()).abs() < 1e-9);
    }
}
