//! Exact arithmetic on elliptic curves over the rationals and the searches
//! built on it: integral points on `y^2 = x^3 + d`, Hall ratios, the
//! `(A/B^2, C/B^3)` anatomy of rational points, length-bounded point
//! censuses over generator lattices, and the supporting number theory.

pub mod arith;
pub mod cli;
pub mod curve;
mod error;
pub mod points;
pub mod search;

pub use arith::{ExactInt, ExactRational, FactorBudget, LengthVerdict, VerdictKind};
pub use curve::{CurveInvariants, CurvePoint, WeierstrassCurve};
pub use error::{Error, Result};
pub use points::{LogDistance, ShapeTriple};

pub(crate) fn serde_bigint<S: serde::Serializer>(v: &num_bigint::BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}
