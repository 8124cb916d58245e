use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::primes::with_primes_up_to;
use crate::error::{Error, Result};

/// A perfect power `value = base^exponent` with the exponent maximal, so
/// `base` is not itself a perfect power. `1` is recorded as `1^2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerEntry {
    #[serde(serialize_with = "crate::serde_bigint")]
    pub value: BigInt,
    #[serde(serialize_with = "crate::serde_bigint")]
    pub base: BigInt,
    pub exponent: u32,
}

/// Decompose `n >= 2` as `base^exponent` with the largest possible exponent
/// (exponent 1 when `n` is not a perfect power).
///
/// `min_base` is a known lower bound on any root `n` could have (for example
/// the trial-division bound when `n` has no small prime factors); it caps the
/// exponents that need testing at `log(n) / log(min_base)`.
pub(crate) fn max_power(n: &BigUint, min_base: u64) -> (BigUint, u32) {
    let mut base = n.clone();
    let mut exponent = 1u32;
    let log2_min = (min_base.max(2) as f64).log2();
    'outer: loop {
        if base < BigUint::from(4u32) {
            break;
        }
        let max_exp = (base.bits() as f64 / log2_min).floor() as u64;
        if max_exp < 2 {
            break;
        }
        let found = with_primes_up_to(max_exp, |primes| {
            primes.iter().find_map(|&p| {
                let p = p as u32;
                let root = base.nth_root(p);
                (root.pow(p) == base).then_some((root, p))
            })
        });
        match found {
            Some((root, p)) => {
                base = root;
                exponent *= p;
                continue 'outer;
            }
            None => break,
        }
    }
    (base, exponent)
}

/// Canonical perfect-power decomposition of `n >= 1`, if any.
pub fn is_perfect_power(n: &BigInt) -> Result<Option<PowerEntry>> {
    if !n.is_positive() {
        return Err(Error::Domain { op: "is_perfect_power", reason: format!("need n >= 1, got {n}") });
    }
    if n.is_one() {
        return Ok(Some(PowerEntry { value: n.clone(), base: BigInt::one(), exponent: 2 }));
    }
    let (base, exponent) = max_power(n.magnitude(), 2);
    Ok((exponent >= 2).then(|| PowerEntry { value: n.clone(), base: base.into(), exponent }))
}

/// Every perfect power `<= limit` in increasing order, starting with 1.
///
/// Each value appears once, in canonical form: bases that are themselves
/// perfect powers are skipped, so `b^e` for non-power `b` enumerates the set
/// without duplicates.
pub fn perfect_powers(limit: &BigInt) -> Vec<PowerEntry> {
    if !limit.is_positive() {
        return Vec::new();
    }
    let mut out = vec![PowerEntry { value: BigInt::one(), base: BigInt::one(), exponent: 2 }];
    let root = limit.sqrt();
    let Some(max_base) = root.to_usize() else {
        // more than usize::MAX entries would be required
        panic!("perfect_powers: limit {limit} is far beyond enumerable range");
    };
    let mut is_power = vec![false; max_base + 1];
    for b in 2..=max_base {
        if is_power[b] {
            continue;
        }
        let base = BigInt::from(b);
        let mut value = &base * &base;
        let mut exponent = 2u32;
        while value <= *limit {
            if let Some(v) = value.to_usize().filter(|&v| v <= max_base) {
                is_power[v] = true;
            }
            out.push(PowerEntry { value: value.clone(), base: base.clone(), exponent });
            value *= &base;
            exponent += 1;
        }
    }
    out.sort_by(|a, b| a.value.cmp(&b.value));
    out
}

/// All pairs of perfect powers `(a, b)` with `b - a = gap`, both `<= limit`.
pub fn power_gap_pairs(limit: &BigInt, gap: &BigInt) -> Vec<(BigInt, BigInt)> {
    if !gap.is_positive() {
        return Vec::new();
    }
    let values: Vec<BigInt> = perfect_powers(limit).into_iter().map(|e| e.value).collect();
    let mut pairs = Vec::new();
    let mut hi = 0;
    for (lo, a) in values.iter().enumerate() {
        let target = a + gap;
        hi = hi.max(lo + 1);
        while hi < values.len() && values[hi] < target {
            hi += 1;
        }
        if hi < values.len() && values[hi] == target {
            pairs.push((a.clone(), target));
        }
    }
    pairs
}

/// `min(a_n - a_{n-1})` over indices `n > from_index` of the perfect-power
/// sequence up to `limit` (index 0 is the term 1).
pub fn min_successive_gap(limit: &BigInt, from_index: usize) -> Result<BigInt> {
    let values: Vec<BigInt> = perfect_powers(limit).into_iter().map(|e| e.value).collect();
    if values.len() < from_index + 2 {
        return Err(Error::InsufficientTerms { have: values.len(), need: from_index + 1 });
    }
    let gap = values[from_index..]
        .windows(2)
        .map(|w| &w[1] - &w[0])
        .min()
        .unwrap_or_else(BigInt::zero);
    Ok(gap)
}
