use num_bigint::{BigInt, Sign};
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Floor square root. `isqrt(n)^2 <= n < (isqrt(n) + 1)^2`.
pub fn isqrt(n: &BigInt) -> Result<BigInt> {
    if n.is_negative() {
        return Err(Error::NegativeInput { op: "isqrt", value: n.clone() });
    }
    Ok(n.sqrt())
}

/// Integer cube root, truncated toward zero, so `icbrt(-n) == -icbrt(n)`.
pub fn icbrt(n: &BigInt) -> BigInt {
    n.cbrt()
}

/// Integer `k`-th root truncated toward zero. Even roots of negatives are an error.
pub fn nth_root(n: &BigInt, k: u32) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::Domain { op: "nth_root", reason: "root index must be positive".into() });
    }
    if n.is_negative() && k % 2 == 0 {
        return Err(Error::NegativeInput { op: "nth_root", value: n.clone() });
    }
    Ok(n.nth_root(k))
}

/// `Some(r)` with `r >= 0` and `r^2 == n`, when `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    match n.sign() {
        Sign::Minus => None,
        Sign::NoSign => Some(BigInt::zero()),
        Sign::Plus => {
            if !square_residue_ok(n) {
                return None;
            }
            let r = n.sqrt();
            (&r * &r == *n).then_some(r)
        }
    }
}

// Quadratic-residue filter mod 64, 63, 65 and 11 (rejects ~99% of non-squares).
fn square_residue_ok(n: &BigInt) -> bool {
    let (_, digits) = n.to_u64_digits();
    let low = digits.first().copied().unwrap_or(0);
    let r = (n % 45045u32).to_u64_digits().1.first().copied().unwrap_or(0);
    const fn table<const M: usize>() -> [bool; M] {
        let mut t = [false; M];
        let mut i = 0;
        while i < M {
            t[(i * i) % M] = true;
            i += 1;
        }
        t
    }
    const Q64: [bool; 64] = table::<64>();
    const Q63: [bool; 63] = table::<63>();
    const Q65: [bool; 65] = table::<65>();
    const Q11: [bool; 11] = table::<11>();
    Q64[(low & 63) as usize]
        && Q63[(r % 63) as usize]
        && Q65[(r % 65) as usize] && Q11[(r % 11) as usize]
}
