use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::arith::{exact_sqrt, ln_abs, ExactRational};
use crate::curve::{CurvePoint, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::points::naive_height;

/// Largest torsion order over the rationals.
const MAX_TORSION_ORDER: i64 = 12;

/// Affine points with `x = A/B^2`, `B <= b_max`, `|A| <= a_max`, ordered by
/// `B` then `A`. Of each pair `±P` only the root with the larger `y` is kept.
pub fn small_rational_point_search(
    curve: &WeierstrassCurve,
    b_max: u64,
    a_max: &BigInt,
) -> Result<Vec<CurvePoint>> {
    if b_max == 0 {
        return Err(Error::Domain { op: "small_rational_point_search", reason: "need B_max >= 1".into() });
    }
    let a_max = a_max.to_i64().ok_or_else(|| Error::Domain {
        op: "small_rational_point_search",
        reason: format!("A_max {a_max} too large to enumerate"),
    })?;
    let [a1, a2, a3, a4, a6] = curve.coefficients();
    let mut out = Vec::new();
    for b in 1..=b_max {
        let b = BigInt::from(b);
        let b2 = &b * &b;
        let b3 = &b2 * &b;
        let b4 = &b2 * &b2;
        let b6 = &b3 * &b3;
        for a in -a_max..=a_max {
            let a = BigInt::from(a);
            if !b.is_one() && !a.gcd(&b).is_one() {
                continue;
            }
            // with Y = B^3 y: Y^2 + (a1 A B + a3 B^3) Y = A^3 + a2 A^2 B^2 + a4 A B^4 + a6 B^6
            let lin: BigInt = a1 * &a * &b + a3 * &b3;
            let rhs: BigInt = &a * &a * &a + a2 * &a * &a * &b2 + a4 * &a * &b4 + a6 * &b6;
            let disc: BigInt = &lin * &lin + 4 * &rhs;
            if disc.is_negative() {
                continue;
            }
            let Some(s) = exact_sqrt(&disc) else { continue };
            let twice_y = &s - &lin;
            if twice_y.is_odd() {
                continue;
            }
            let x = ExactRational::new(a.clone(), b2.clone());
            let y = ExactRational::new(twice_y / 2, b3.clone());
            if *x.denom() != b2 {
                continue;
            }
            let p = CurvePoint::affine(x, y);
            debug_assert!(curve.is_on_curve(&p));
            out.push(p);
        }
    }
    Ok(out)
}

/// Order of `p` if it is a torsion point.
pub fn torsion_order(curve: &WeierstrassCurve, p: &CurvePoint) -> Option<i64> {
    let mut acc = p.clone();
    for n in 1..=MAX_TORSION_ORDER {
        if acc.is_infinity() {
            return Some(n);
        }
        if n < MAX_TORSION_ORDER {
            acc = curve.add(&acc, p);
        }
    }
    acc.is_infinity().then_some(MAX_TORSION_ORDER)
}

/// Torsion points among `candidates`, closed under negation, without the identity.
pub fn torsion_points(curve: &WeierstrassCurve, candidates: &[CurvePoint]) -> Vec<CurvePoint> {
    let mut out: Vec<CurvePoint> = Vec::new();
    for p in candidates.iter().filter(|p| !p.is_infinity() && torsion_order(curve, p).is_some()) {
        for t in [p.clone(), curve.negate(p)] {
            if !out.contains(&t) {
                out.push(t);
            }
        }
    }
    out
}

/// The first `(a, b)` (by `max(|a|,|b|)`, then `a`, then `b`) with
/// `1 <= |a|, |b| <= bound` and `a p = b q`, if any.
pub fn find_relation(
    curve: &WeierstrassCurve,
    p: &CurvePoint,
    q: &CurvePoint,
    bound: u32,
) -> Option<(i64, i64)> {
    let bound = bound as i64;
    let multiples = |pt: &CurvePoint| {
        let mut v = Vec::with_capacity(bound as usize);
        let mut acc = pt.clone();
        for _ in 0..bound {
            v.push(acc.clone());
            acc = curve.add(&acc, pt);
        }
        v
    };
    let mp = multiples(p);
    let mq = multiples(q);
    let mut found: Option<(i64, i64)> = None;
    let key = |(a, b): (i64, i64)| (a.abs().max(b.abs()), a, b);
    for (i, ap) in mp.iter().enumerate() {
        for (j, bq) in mq.iter().enumerate() {
            let (a, b) = (i as i64 + 1, j as i64 + 1);
            let candidate = if ap == bq {
                Some((a, b))
            } else if *ap == curve.negate(bq) {
                Some((a, -b))
            } else {
                None
            };
            if let Some(c) = candidate {
                if found.map_or(true, |f| key(c) < key(f)) {
                    found = Some(c);
                }
            }
        }
    }
    found
}

/// Doublings used by [`approx_canonical_height`].
const HEIGHT_DOUBLINGS: u32 = 6;

/// `h(x(2^k P)) / 4^k` with `h(a/b) = log max(|a|, |b|)`: the canonical
/// height (in the `x`-coordinate normalization) up to an error of order
/// `4^-k`.
pub fn approx_canonical_height(curve: &WeierstrassCurve, p: &CurvePoint) -> f64 {
    let mut acc = p.clone();
    for _ in 0..HEIGHT_DOUBLINGS {
        acc = curve.double(&acc);
    }
    match acc.x() {
        None => 0.0,
        Some(x) => ln_abs(&naive_height(x)) / 4f64.powi(HEIGHT_DOUBLINGS as i32),
    }
}

/// `<P, Q> = (h(P + Q) - h(P) - h(Q)) / 2` for the approximate height.
fn pairing(curve: &WeierstrassCurve, p: &CurvePoint, q: &CurvePoint, hp: f64, hq: f64) -> f64 {
    (approx_canonical_height(curve, &curve.add(p, q)) - hp - hq) / 2.0
}

/// Whether `q + t` is related to `p` for some known torsion point `t`.
fn dependent(curve: &WeierstrassCurve, p: &CurvePoint, q: &CurvePoint, torsion: &[CurvePoint], bound: u32) -> bool {
    torsion.iter().any(|t| {
        let shifted = curve.add(q, t);
        !shifted.is_infinity()
            && torsion_order(curve, &shifted).is_none()
            && find_relation(curve, p, &shifted, bound).is_some()
    })
}

/// Pick a generator pair from candidate points.
///
/// Points of infinite order are ranked by approximate canonical height (ties
/// by naive height of `x`, then `x`). `P` is the lowest; `Q` the lowest with
/// no relation `a P = b (Q + T)`, `1 <= |a|, |b| <= relation_bound`, for `T`
/// the identity or a torsion point among the candidates. The pair is then
/// Gauss-reduced under the height pairing, so any two candidate pairs spanning
/// the same lattice give the same search grid up to signs and order.
pub fn choose_generators(
    curve: &WeierstrassCurve,
    candidates: &[CurvePoint],
    relation_bound: u32,
) -> Option<(CurvePoint, CurvePoint)> {
    let torsion: Vec<CurvePoint> = std::iter::once(CurvePoint::Infinity)
        .chain(candidates.iter().filter(|p| torsion_order(curve, p).is_some()).cloned())
        .collect();
    let mut seen: HashSet<ExactRational> = HashSet::new();
    let mut ranked: Vec<(f64, BigInt, ExactRational, CurvePoint)> = candidates
        .iter()
        .filter(|p| !p.is_infinity() && torsion_order(curve, p).is_none())
        .filter(|p| seen.insert(p.x().expect("affine").clone()))
        .map(|p| {
            let x = p.x().expect("affine").clone();
            (approx_canonical_height(curve, p), naive_height(&x), x, p.clone())
        })
        .collect();
    ranked.sort_by(|a, b| a.0.total_cmp(&b.0).then_with(|| a.1.cmp(&b.1)).then_with(|| a.2.cmp(&b.2)));
    let (hp, _, _, p) = ranked.first()?.clone();
    let (hq, _, _, q) = ranked[1..]
        .iter()
        .find(|(_, _, _, q)| !dependent(curve, &p, q, &torsion, relation_bound))?
        .clone();
    Some(gauss_reduce(curve, (p, hp), (q, hq)))
}

fn gauss_reduce(
    curve: &WeierstrassCurve,
    (mut p, mut hp): (CurvePoint, f64),
    (mut q, mut hq): (CurvePoint, f64),
) -> (CurvePoint, CurvePoint) {
    // bounded: each step strictly shrinks the pair in a positive-definite form
    for _ in 0..64 {
        if hq < hp {
            std::mem::swap(&mut p, &mut q);
            std::mem::swap(&mut hp, &mut hq);
        }
        let mu = (pairing(curve, &p, &q, hp, hq) / hp).round() as i64;
        if mu == 0 {
            break;
        }
        let reduced = curve.sub(&q, &curve.scalar_mul(mu, &p));
        let hr = approx_canonical_height(curve, &reduced);
        if hr >= hq {
            break;
        }
        q = reduced;
        hq = hr;
    }
    (p, q)
}
