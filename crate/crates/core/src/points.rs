//! The arithmetic anatomy of a rational point: its `(A/B^2, C/B^3)` shape,
//! its length (number of distinct primes in `B`), naive heights and
//! logarithmic distances.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{distinct_prime_count_bounded, exact_sqrt, ln_rational, ExactRational, FactorBudget};
use crate::curve::CurvePoint;
use crate::error::{Error, Result};

pub use crate::arith::{LengthVerdict, VerdictKind};

/// `x = A/B^2`, `y = C/B^3` in lowest terms, `B >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeTriple {
    #[serde(serialize_with = "crate::serde_bigint")]
    pub a: BigInt,
    #[serde(serialize_with = "crate::serde_bigint")]
    pub b: BigInt,
    #[serde(serialize_with = "crate::serde_bigint")]
    pub c: BigInt,
}

impl ShapeTriple {
    /// Rebuild `(A/B^2, C/B^3)`.
    pub fn to_point(&self) -> CurvePoint {
        let b2 = &self.b * &self.b;
        let b3 = &b2 * &self.b;
        CurvePoint::affine(
            ExactRational::new(self.a.clone(), b2),
            ExactRational::new(self.c.clone(), b3),
        )
    }
}

/// Decompose an affine point on an integral model as `(A/B^2, C/B^3)`.
pub fn canonical_shape(p: &CurvePoint) -> Result<ShapeTriple> {
    let (x, y) = p.coords().ok_or(Error::InfinityOperand("canonical_shape"))?;
    let b = exact_sqrt(x.denom()).ok_or_else(|| Error::NonIntegralModel(p.to_string()))?;
    if *y.denom() != b.pow(3) {
        return Err(Error::NonIntegralModel(p.to_string()));
    }
    Ok(ShapeTriple { a: x.numer().clone(), b, c: y.numer().clone() })
}

/// The number of distinct primes dividing `B_P`; integral points have length 0.
pub fn point_length(p: &CurvePoint, budget: &FactorBudget) -> Result<LengthVerdict> {
    point_length_bounded(p, budget, None)
}

/// As [`point_length`], stopping once the length certainly exceeds `stop_above`.
pub fn point_length_bounded(
    p: &CurvePoint,
    budget: &FactorBudget,
    stop_above: Option<u32>,
) -> Result<LengthVerdict> {
    let shape = canonical_shape(p)?;
    if shape.b.is_one() {
        return Ok(LengthVerdict::exact(0));
    }
    distinct_prime_count_bounded(&shape.b, budget, stop_above)
}

/// `H(a/b) = max(|a|, |b|)` for a rational in lowest terms.
pub fn naive_height(q: &ExactRational) -> BigInt {
    q.numer().abs().max(q.denom().clone())
}

/// Logarithmic distance; large values mean close points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum LogDistance {
    Finite(f64),
    /// `x(P) = x(Q)`: the distance is infinite.
    InfiniteProximity,
}

impl LogDistance {
    pub fn finite(self) -> Option<f64> {
        match self {
            LogDistance::Finite(v) => Some(v),
            LogDistance::InfiniteProximity => None,
        }
    }
}

impl std::fmt::Display for LogDistance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LogDistance::Finite(v) => match f.precision() {
                Some(p) => write!(f, "{v:.p$}"),
                None => write!(f, "{v}"),
            },
            LogDistance::InfiniteProximity => f.write_str("inf"),
        }
    }
}

/// `h_Q(P) = -log |x(Q) - x(P)|` for finite `Q`, and `log |x(P)|` when `Q`
/// is the point at infinity (natural logs).
pub fn log_distance(reference: &CurvePoint, p: &CurvePoint) -> Result<LogDistance> {
    let xp = p.x().ok_or(Error::InfinityOperand("log_distance"))?;
    Ok(match reference.x() {
        None if xp.is_zero() => LogDistance::Finite(f64::NEG_INFINITY),
        None => LogDistance::Finite(ln_rational(xp)),
        Some(xq) => {
            let diff = xq - xp;
            if diff.is_zero() {
                LogDistance::InfiniteProximity
            } else {
                LogDistance::Finite(-ln_rational(&diff))
            }
        }
    })
}

/// `gcd(A, B) = gcd(C, B) = 1` and the triple rebuilds `p` exactly.
pub fn shape_round_trips(p: &CurvePoint, shape: &ShapeTriple) -> bool {
    shape.b.is_positive()
        && shape.a.gcd(&shape.b).is_one()
        && shape.c.gcd(&shape.b).is_one()
        && shape.to_point() == *p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::WeierstrassCurve;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n.into(), d.into())
    }

    fn big(s: &str) -> BigInt {
        s.parse().unwrap()
    }

    #[test]
    fn shapes() {
        let s = canonical_shape(&CurvePoint::from_ints(3, 5)).unwrap();
        assert_eq!((s.a, s.b, s.c), (3.into(), 1.into(), 5.into()));
        let p = CurvePoint::affine(q(-11, 9), q(98, 27));
        let s = canonical_shape(&p).unwrap();
        assert_eq!((s.a.clone(), s.b.clone(), s.c.clone()), ((-11).into(), 3.into(), 98.into()));
        assert!(shape_round_trips(&p, &s));
        let s = canonical_shape(&CurvePoint::affine(q(49, 4), q(-217, 8))).unwrap();
        assert_eq!((s.a, s.b, s.c), (49.into(), 2.into(), (-217).into()));
    }

    #[test]
    fn non_integral_shapes_rejected() {
        assert!(matches!(
            canonical_shape(&CurvePoint::affine(q(1, 2), q(1, 8))),
            Err(Error::NonIntegralModel(_))
        ));
        assert!(matches!(
            canonical_shape(&CurvePoint::affine(q(1, 4), q(1, 4))),
            Err(Error::NonIntegralModel(_))
        ));
        assert!(canonical_shape(&CurvePoint::Infinity).is_err());
    }

    #[test]
    fn lengths() {
        let budget = FactorBudget::default();
        assert_eq!(point_length(&CurvePoint::from_ints(3, 5), &budget).unwrap(), LengthVerdict::exact(0));
        let p = CurvePoint::affine(q(-11, 9), q(98, 27));
        assert_eq!(point_length(&p, &budget).unwrap(), LengthVerdict::exact(1));

        // the point on y^2 = x^3 + 15 with x = 75721/53^2
        let e = WeierstrassCurve::mordell(&15.into()).unwrap();
        let x = ExactRational::new(75721.into(), (53 * 53).into());
        let rhs = &x * &x * &x + ExactRational::from_integer(15.into());
        let y = ExactRational::new(
            exact_sqrt(rhs.numer()).unwrap(),
            exact_sqrt(rhs.denom()).unwrap(),
        );
        let p = CurvePoint::affine(x, y);
        assert!(e.is_on_curve(&p));
        assert_eq!(point_length(&p, &budget).unwrap(), LengthVerdict::exact(1));
    }

    #[test]
    fn heights() {
        assert_eq!(naive_height(&q(5, 1)), 5.into());
        assert_eq!(naive_height(&q(31, 8)), 31.into());
        assert_eq!(naive_height(&q(621, 50)), 621.into());
        assert_eq!(naive_height(&q(-3, 50)), 50.into());
    }

    #[test]
    fn distances() {
        let inf = CurvePoint::Infinity;
        let origin = CurvePoint::from_ints(0, 0);
        let p = CurvePoint::affine(q(1, 8), q(1, 1));
        let d = log_distance(&origin, &p).unwrap().finite().unwrap();
        assert!((d - 8f64.ln()).abs() < 1e-12);
        assert!((d - 2.079).abs() < 1e-3);

        let a = CurvePoint::affine(q(3, 7), q(1, 1));
        let b = CurvePoint::affine(q(-5, 2), q(2, 1));
        assert_eq!(log_distance(&a, &b).unwrap(), log_distance(&b, &a).unwrap());

        let same_x = CurvePoint::affine(q(3, 7), q(-1, 1));
        assert_eq!(log_distance(&a, &same_x).unwrap(), LogDistance::InfiniteProximity);

        // far-apart points give negative distances, kept as-is
        let far = CurvePoint::from_ints(1000, 1);
        assert!(log_distance(&origin, &far).unwrap().finite().unwrap() < 0.0);

        let x = ExactRational::new(big("175567984"), big("1000"));
        let p = CurvePoint::affine(x, q(1, 1));
        let d = log_distance(&inf, &p).unwrap().finite().unwrap();
        assert!((d - 12.075).abs() < 1e-3);
        assert!(log_distance(&inf, &CurvePoint::Infinity).is_err());
    }

    #[test]
    fn distance_from_infinity_via_shape() {
        // |x| = |A| / B^2, so log|x| = log H(x) - 2 log B when |A| > B^2
        let p = CurvePoint::affine(q(75721, 53 * 53), q(1, 1));
        let s = canonical_shape(&CurvePoint::affine(q(75721, 53 * 53), q(1, 53 * 53 * 53))).unwrap();
        let lhs = log_distance(&CurvePoint::Infinity, &p).unwrap().finite().unwrap();
        let h = naive_height(p.x().unwrap());
        let rhs = crate::arith::ln_abs(&h) - 2.0 * crate::arith::ln_abs(&s.b);
        assert!((lhs - rhs).abs() < 1e-12);
    }
}
