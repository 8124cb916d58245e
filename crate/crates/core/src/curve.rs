//! Weierstrass curves over the rationals and the chord-and-tangent group law.
//!
//! Curves are given in long form
//! `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6` with integer coefficients,
//! written `[a1,a2,a3,a4,a6]`. All point arithmetic is exact.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::arith::{ln_abs, ExactRational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeierstrassCurve {
    pub a1: BigInt,
    pub a2: BigInt,
    pub a3: BigInt,
    pub a4: BigInt,
    pub a6: BigInt,
}

/// The b-invariants and discriminant of a curve. `4 b8 = b2 b6 - b4^2`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurveInvariants {
    #[serde(serialize_with = "crate::serde_bigint")]
    pub b2: BigInt,
    #[serde(serialize_with = "crate::serde_bigint")]
    pub b4: BigInt,
    #[serde(serialize_with = "crate::serde_bigint")]
    pub b6: BigInt,
    #[serde(serialize_with = "crate::serde_bigint")]
    pub b8: BigInt,
    #[serde(serialize_with = "crate::serde_bigint")]
    pub discriminant: BigInt,
    /// `ln |discriminant|`.
    pub h_e: f64,
}

/// b-invariants and discriminant of arbitrary integer coefficients.
pub fn invariants_of(a: [&BigInt; 5]) -> CurveInvariants {
    let [a1, a2, a3, a4, a6] = a;
    let b2 = a1 * a1 + 4 * a2;
    let b4: BigInt = 2 * a4 + a1 * a3;
    let b6 = a3 * a3 + 4 * a6;
    let b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    let discriminant = -&b2 * &b2 * &b8 - 8 * b4.pow(3) - 27 * &b6 * &b6 + 9 * &b2 * &b4 * &b6;
    let h_e = ln_abs(&discriminant);
    CurveInvariants { b2, b4, b6, b8, discriminant, h_e }
}

impl WeierstrassCurve {
    /// Build a curve, rejecting singular coefficient sets.
    pub fn new(a1: BigInt, a2: BigInt, a3: BigInt, a4: BigInt, a6: BigInt) -> Result<Self> {
        let curve = WeierstrassCurve { a1, a2, a3, a4, a6 };
        if curve.invariants().discriminant.is_zero() {
            return Err(Error::SingularCurve(curve.to_string()));
        }
        Ok(curve)
    }

    pub fn from_coeffs(a: [i64; 5]) -> Result<Self> {
        let [a1, a2, a3, a4, a6] = a.map(BigInt::from);
        Self::new(a1, a2, a3, a4, a6)
    }

    /// `y^2 = x^3 + d`, the Mordell curve. Discriminant `-432 d^2`.
    pub fn mordell(d: &BigInt) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::SingularCurve("[0,0,0,0,0]".into()));
        }
        Self::new(BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero(), d.clone())
    }

    pub fn coefficients(&self) -> [&BigInt; 5] {
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6]
    }

    pub fn invariants(&self) -> CurveInvariants {
        invariants_of(self.coefficients())
    }

    pub fn discriminant(&self) -> BigInt {
        self.invariants().discriminant
    }

    /// Exact membership test; the point at infinity is always on the curve.
    pub fn is_on_curve(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => {
                let lhs = y * (y + x * &self.a1 + &self.a3);
                let rhs = ((x + &self.a2) * x + &self.a4) * x + &self.a6;
                lhs == rhs
            }
        }
    }

    /// Error unless `p` lies on the curve.
    pub fn check(&self, p: &CurvePoint) -> Result<()> {
        if self.is_on_curve(p) {
            Ok(())
        } else {
            Err(Error::NotOnCurve { point: p.to_string(), curve: self.to_string() })
        }
    }

    /// `-(x, y) = (x, -y - a1 x - a3)`.
    pub fn negate(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine {
                x: x.clone(),
                y: -y - x * &self.a1 - &self.a3,
            },
        }
    }

    /// Slope and the `x` of the third intersection of the line through `p`
    /// and `q` (tangent when equal); `None` for a vertical line.
    fn line(
        &self,
        (x1, y1): (&ExactRational, &ExactRational),
        (x2, y2): (&ExactRational, &ExactRational),
    ) -> Option<(ExactRational, ExactRational)> {
        let slope = if x1 == x2 {
            let two = BigInt::from(2);
            let denom = y1 * &two + x1 * &self.a1 + &self.a3;
            if denom.is_zero() || y1 != y2 {
                return None;
            }
            let num = (x1 * BigInt::from(3) + &self.a2 * &two) * x1 + &self.a4 - y1 * &self.a1;
            num / denom
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let x3 = (&slope + &self.a1) * &slope - &self.a2 - x1 - x2;
        Some((slope, x3))
    }

    /// Third point where the chord through `p`, `q` (tangent if `p == q`)
    /// meets the curve, before reflection. Vertical lines give infinity.
    pub fn chord_third_intersection(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
        let (Some(a), Some(b)) = (p.coords(), q.coords()) else {
            return Err(Error::InfinityOperand("chord_third_intersection"));
        };
        Ok(match self.line(a, b) {
            None => CurvePoint::Infinity,
            Some((slope, x3)) => {
                let y3 = &slope * (&x3 - a.0) + a.1;
                CurvePoint::Affine { x: x3, y: y3 }
            }
        })
    }

    /// Group law; infinity is the identity.
    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let (a, b) = match (p.coords(), q.coords()) {
            (None, _) => return q.clone(),
            (_, None) => return p.clone(),
            (Some(a), Some(b)) => (a, b),
        };
        match self.line(a, b) {
            None => CurvePoint::Infinity,
            Some((slope, x3)) => {
                // reflect (x3, slope (x3 - x1) + y1)
                let y = -(&slope + &self.a1) * &x3 + &slope * a.0 - a.1 - &self.a3;
                CurvePoint::Affine { x: x3, y }
            }
        }
    }

    pub fn double(&self, p: &CurvePoint) -> CurvePoint {
        self.add(p, p)
    }

    pub fn sub(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        self.add(p, &self.negate(q))
    }

    /// `m * p` by double-and-add; negative `m` negates.
    pub fn scalar_mul(&self, m: i64, p: &CurvePoint) -> CurvePoint {
        let mut base = if m < 0 { self.negate(p) } else { p.clone() };
        let mut k = m.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.double(&base);
            }
        }
        acc
    }

    /// `m * p + n * q`.
    pub fn linear_comb(&self, m: i64, p: &CurvePoint, n: i64, q: &CurvePoint) -> CurvePoint {
        self.add(&self.scalar_mul(m, p), &self.scalar_mul(n, q))
    }
}

impl fmt::Display for WeierstrassCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{},{},{}]", self.a1, self.a2, self.a3, self.a4, self.a6)
    }
}

impl FromStr for WeierstrassCurve {
    type Err = Error;

    /// Parses `[a1,a2,a3,a4,a6]`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let compact = normalize_literal(s);
        let inner = compact
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("curve must look like [a1,a2,a3,a4,a6], got {s:?}")))?;
        let coeffs = inner
            .split(',')
            .map(|t| t.parse::<BigInt>().map_err(|_| Error::Parse(format!("bad coefficient {t:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        let [a1, a2, a3, a4, a6]: [BigInt; 5] = coeffs
            .try_into()
            .map_err(|_| Error::Parse(format!("curve needs exactly five coefficients, got {s:?}")))?;
        WeierstrassCurve::new(a1, a2, a3, a4, a6)
    }
}

/// Strip whitespace and map the typographic minus sign to ASCII.
pub(crate) fn normalize_literal(s: &str) -> String {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == '\u{2212}' { '-' } else { c })
        .collect()
}

/// The point at infinity or an affine point with rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine { x: ExactRational, y: ExactRational },
}

impl CurvePoint {
    pub fn affine(x: ExactRational, y: ExactRational) -> Self {
        CurvePoint::Affine { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        CurvePoint::Affine { x: BigInt::from(x).into(), y: BigInt::from(y).into() }
    }

    /// `(xn/xd, yn/yd)`, reduced.
    pub fn from_fractions(xn: i64, xd: i64, yn: i64, yd: i64) -> Self {
        CurvePoint::Affine {
            x: ExactRational::new(xn.into(), xd.into()),
            y: ExactRational::new(yn.into(), yd.into()),
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn x(&self) -> Option<&ExactRational> {
        self.coords().map(|c| c.0)
    }

    pub fn y(&self) -> Option<&ExactRational> {
        self.coords().map(|c| c.1)
    }

    pub fn coords(&self) -> Option<(&ExactRational, &ExactRational)> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { x, y } => Some((x, y)),
        }
    }

    /// Both coordinates are integers.
    pub fn is_integral(&self) -> bool {
        self.coords().is_some_and(|(x, y)| x.is_integer() && y.is_integer())
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => f.write_str("inf"),
            CurvePoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

fn parse_rational(t: &str, whole: &str) -> Result<ExactRational> {
    let bad = || Error::Parse(format!("bad coordinate {t:?} in {whole:?}; expected an exact integer or num/den"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, d),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(ExactRational::new(num, den))
}

impl FromStr for CurvePoint {
    type Err = Error;

    /// Parses `(x, y)` where each coordinate is `[-]num[/den]`, or `inf`.
    fn from_str(s: &str) -> Result<Self> {
        let compact = normalize_literal(s);
        if matches!(compact.to_ascii_lowercase().as_str(), "inf" | "infinity" | "o") {
            return Ok(CurvePoint::Infinity);
        }
        let inner = compact
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .or_else(|| compact.strip_prefix('[').and_then(|t| t.strip_suffix(']')))
            .ok_or_else(|| Error::Parse(format!("point must look like (x, y), got {s:?}")))?;
        let (x, y) = inner
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("point needs two coordinates, got {s:?}")))?;
        if y.contains(',') {
            return Err(Error::Parse(format!("point needs two coordinates, got {s:?}")));
        }
        Ok(CurvePoint::Affine { x: parse_rational(x, s)?, y: parse_rational(y, s)? })
    }
}

/// `x` is the square of a rational; returns the non-negative root.
pub fn rational_sqrt(q: &ExactRational) -> Option<ExactRational> {
    if q.is_negative() {
        return None;
    }
    let n = crate::arith::exact_sqrt(q.numer())?;
    let d = crate::arith::exact_sqrt(q.denom())?;
    Some(ExactRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n.into(), d.into())
    }

    fn curve(a: [i64; 5]) -> WeierstrassCurve {
        WeierstrassCurve::from_coeffs(a).unwrap()
    }

    #[test]
    fn discriminants_of_printed_rows() {
        assert_eq!(curve([0, 0, 1, -13, 18]).discriminant().abs(), BigInt::from(3275));
        assert_eq!(curve([0, 0, 0, 150, 0]).discriminant().abs(), BigInt::from(216000000));
        assert_eq!(curve([0, 1, 1, -2, 0]).discriminant().abs(), BigInt::from(389));
    }

    #[test]
    fn mordell_discriminants() {
        let d = |v: i64| WeierstrassCurve::mordell(&BigInt::from(v)).unwrap().discriminant();
        assert_eq!(d(15), BigInt::from(-97200));
        assert_eq!(d(-2), BigInt::from(-1728));
        assert_eq!(d(24), BigInt::from(-248832));
        assert!(matches!(WeierstrassCurve::mordell(&BigInt::zero()), Err(Error::SingularCurve(_))));
        assert!(WeierstrassCurve::from_coeffs([0, 0, 0, -3, 2]).is_err());
    }

    #[test]
    fn membership() {
        let e = WeierstrassCurve::mordell(&BigInt::from(-2)).unwrap();
        assert!(e.is_on_curve(&CurvePoint::from_ints(3, 5)));
        assert!(e.is_on_curve(&CurvePoint::Infinity));
        assert!(!e.is_on_curve(&CurvePoint::from_ints(3, 4)));
        let e15 = WeierstrassCurve::mordell(&BigInt::from(15)).unwrap();
        assert!(e15.is_on_curve(&CurvePoint::affine(q(1, 4), q(31, 8))));
    }

    #[test]
    fn negation() {
        let e = WeierstrassCurve::mordell(&BigInt::from(-2)).unwrap();
        assert_eq!(e.negate(&CurvePoint::from_ints(3, 5)), CurvePoint::from_ints(3, -5));
        assert_eq!(e.negate(&CurvePoint::Infinity), CurvePoint::Infinity);
        let e = curve([0, 0, 0, -7, 10]);
        assert_eq!(e.negate(&CurvePoint::from_ints(2, 2)), CurvePoint::from_ints(2, -2));
        // a1, a3 cross terms
        let e = curve([1, -1, 1, -42, 105]);
        let p = CurvePoint::from_ints(3, -1);
        assert!(e.is_on_curve(&p));
        assert_eq!(e.negate(&p), CurvePoint::from_ints(3, -3));
        assert_eq!(e.add(&p, &e.negate(&p)), CurvePoint::Infinity);
    }

    #[test]
    fn chord_construction() {
        let e = WeierstrassCurve::mordell(&BigInt::from(15)).unwrap();
        let p = CurvePoint::from_ints(1, 4);
        let r = CurvePoint::affine(q(1, 4), q(31, 8));
        let third = e.chord_third_intersection(&p, &r).unwrap();
        assert_eq!(third, CurvePoint::affine(q(-11, 9), q(98, 27)));
        assert_eq!(e.add(&p, &r), CurvePoint::affine(q(-11, 9), q(-98, 27)));

        // tangent at (1,4): slope 3/8, third point is -2P
        let t = e.chord_third_intersection(&p, &p).unwrap();
        assert!(e.is_on_curve(&t));
        assert_eq!(t, e.negate(&e.double(&p)));
        let slope = q(3, 8);
        let x3 = &slope * &slope - q(2, 1);
        assert_eq!(t.x().unwrap(), &x3);

        let vertical = e.chord_third_intersection(&p, &e.negate(&p)).unwrap();
        assert_eq!(vertical, CurvePoint::Infinity);
        assert!(e.chord_third_intersection(&CurvePoint::Infinity, &p).is_err());
    }

    #[test]
    fn identity_and_inverse() {
        let e = WeierstrassCurve::mordell(&BigInt::from(-2)).unwrap();
        let p = CurvePoint::from_ints(3, 5);
        assert_eq!(e.add(&p, &CurvePoint::Infinity), p);
        assert_eq!(e.add(&CurvePoint::Infinity, &p), p);
        assert_eq!(e.add(&p, &CurvePoint::from_ints(3, -5)), CurvePoint::Infinity);
    }

    #[test]
    fn scalar_multiples() {
        let e = WeierstrassCurve::mordell(&BigInt::from(15)).unwrap();
        let p = CurvePoint::from_ints(1, 4);
        assert_eq!(e.scalar_mul(0, &p), CurvePoint::Infinity);
        assert_eq!(e.scalar_mul(1, &p), p);
        let two = e.scalar_mul(2, &p);
        assert!(e.is_on_curve(&two));
        assert_eq!(two, e.add(&p, &p));
        assert_eq!(e.scalar_mul(-3, &p), e.negate(&e.scalar_mul(3, &p)));
    }

    #[test]
    fn two_torsion_doubles_to_infinity() {
        let e = curve([0, 0, 0, 34, 0]);
        let t = CurvePoint::from_ints(0, 0);
        assert_eq!(e.double(&t), CurvePoint::Infinity);
    }

    #[test]
    fn literals() {
        let e: WeierstrassCurve = " [0, 1, 1, -2, 0] ".parse().unwrap();
        assert_eq!(e, curve([0, 1, 1, -2, 0]));
        assert_eq!(e.to_string(), "[0,1,1,-2,0]");
        assert!("[0,1,1,-2]".parse::<WeierstrassCurve>().is_err());
        assert!("0,1,1,-2,0".parse::<WeierstrassCurve>().is_err());

        let p: CurvePoint = "( \u{2212}11/9 , 98/27 )".parse().unwrap();
        assert_eq!(p, CurvePoint::affine(q(-11, 9), q(98, 27)));
        assert_eq!(p.to_string(), "(-11/9, 98/27)");
        assert_eq!("inf".parse::<CurvePoint>().unwrap(), CurvePoint::Infinity);
        assert_eq!("(4/2,-6)".parse::<CurvePoint>().unwrap(), CurvePoint::from_ints(2, -6));
        assert!("(175567.98, 1)".parse::<CurvePoint>().is_err());
        assert!("(1/0, 1)".parse::<CurvePoint>().is_err());
        assert!("(1, 2, 3)".parse::<CurvePoint>().is_err());
    }

    proptest! {
        #[test]
        fn b_invariant_identity(a in proptest::array::uniform5(-10_000i64..10_000)) {
            let a = a.map(BigInt::from);
            let inv = invariants_of([&a[0], &a[1], &a[2], &a[3], &a[4]]);
            prop_assert_eq!(&inv.b8 * 4, &inv.b2 * &inv.b6 - &inv.b4 * &inv.b4);
        }

        #[test]
        fn mordell_discriminant_formula(d in -1_000_000_000_000i64..1_000_000_000_000) {
            prop_assume!(d != 0);
            let d = BigInt::from(d);
            let e = WeierstrassCurve::mordell(&d).unwrap();
            prop_assert_eq!(e.discriminant(), -432 * &d * &d);
        }
    }
}
