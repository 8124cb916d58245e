use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{exact_sqrt, icbrt, ln_abs};
use crate::error::{Error, Result};

/// An integral solution of `y^2 = x^3 + d`, with `y >= 0` standing for `±y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntegralSolution {
    #[serde(serialize_with = "crate::serde_bigint")]
    pub x: BigInt,
    #[serde(serialize_with = "crate::serde_bigint")]
    pub y: BigInt,
}

/// One row of a Hall-ratio table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HallRecord {
    #[serde(serialize_with = "crate::serde_bigint")]
    pub d: BigInt,
    #[serde(serialize_with = "crate::serde_bigint")]
    pub x: BigInt,
    /// Witness with `y^2 = x^3 + d`, `y >= 0`.
    #[serde(serialize_with = "crate::serde_bigint")]
    pub y: BigInt,
    pub log_x: f64,
    pub ratio: f64,
}

// Bound below which x^3 + d is evaluated in i128.
const I128_X_LIMIT: i64 = 1_000_000_000_000;
const I128_D_LIMIT: i128 = 1 << 100;

/// All integral points on `y^2 = x^3 + d` with `|x| <= x_bound`, ascending in `x`.
pub fn integral_points_mordell(d: &BigInt, x_bound: &BigInt) -> Result<Vec<IntegralSolution>> {
    if d.is_zero() {
        return Err(Error::ZeroInput { op: "integral_points_mordell" });
    }
    if !x_bound.is_positive() {
        return Ok(Vec::new());
    }
    // x^3 >= -d, so x starts at the cube root of -d (rounded up)
    let mut start = icbrt(&-d);
    if &start * &start * &start < -d {
        start += 1;
    }
    let start = start.max(-x_bound);
    if start > *x_bound {
        return Ok(Vec::new());
    }
    let small = (x_bound.to_i64(), d.to_i128(), start.to_i64());
    if let (Some(hi), Some(dd), Some(lo)) = small {
        if hi <= I128_X_LIMIT && dd.abs() < I128_D_LIMIT {
            return Ok(scan_i128(lo, hi, dd));
        }
    }
    let mut out = Vec::new();
    let mut x = start;
    while x <= *x_bound {
        if let Some(y) = exact_sqrt(&(&x * &x * &x + d)) {
            out.push(IntegralSolution { x: x.clone(), y });
        }
        x += 1;
    }
    Ok(out)
}

fn scan_i128(lo: i64, hi: i64, d: i128) -> Vec<IntegralSolution> {
    let mut out = Vec::new();
    for x in lo..=hi {
        let x = x as i128;
        let v = x * x * x + d;
        if v < 0 || !square_residue_u64(v as u64) {
            continue;
        }
        if let Some(y) = sqrt_u128_exact(v as u128) {
            out.push(IntegralSolution { x: x.into(), y: y.into() });
        }
    }
    out
}

/// Quadratic residues mod 64; the low bits of `v` suffice.
fn square_residue_u64(v: u64) -> bool {
    const MASK: u64 = {
        let mut m = 0u64;
        let mut i = 0;
        while i < 64 {
            m |= 1 << ((i * i) % 64);
            i += 1;
        }
        m
    };
    MASK >> (v % 64) & 1 == 1
}

fn sqrt_u128_exact(v: u128) -> Option<u128> {
    let mut r = (v as f64).sqrt() as u128;
    if r > 0 {
        r = (r + v / r) / 2;
    }
    while r * r > v {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= v {
        r += 1;
    }
    (r * r == v).then_some(r)
}

/// The Hall ratio `log x / (2 log |d|)` of an integral point, after checking
/// that `x^3 + d` is a square.
pub fn hall_ratio(d: &BigInt, x: &BigInt) -> Result<HallRecord> {
    if *x < BigInt::from(2) {
        return Err(Error::Domain { op: "hall_ratio", reason: format!("need x >= 2, got {x}") });
    }
    if d.abs() < BigInt::from(2) {
        return Err(Error::Domain { op: "hall_ratio", reason: format!("need |d| >= 2, got {d}") });
    }
    let y = exact_sqrt(&(x * x * x + d))
        .ok_or_else(|| Error::NoWitness { d: d.clone(), x: x.clone() })?;
    let log_x = ln_abs(x);
    let ratio = log_x / (2.0 * ln_abs(d));
    Ok(HallRecord { d: d.clone(), x: x.clone(), y, log_x, ratio })
}

/// Hall records for every integral point with `2 <= x <= x_bound`.
pub fn hall_scan(d: &BigInt, x_bound: &BigInt) -> Result<Vec<HallRecord>> {
    if d.abs() <= BigInt::one() {
        return Err(Error::Domain { op: "hall_scan", reason: format!("need |d| >= 2, got {d}") });
    }
    integral_points_mordell(d, x_bound)?
        .into_iter()
        .filter(|s| s.x >= BigInt::from(2))
        .map(|s| hall_ratio(d, &s.x))
        .collect()
}
