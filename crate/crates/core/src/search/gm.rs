use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::curve::{rational_sqrt, CurvePoint, WeierstrassCurve};
use crate::error::{Error, Result};

use super::generators::find_relation;

/// Outcome of checking that two points on `y^2 = x^3 - N x` satisfy the
/// hypotheses bounding their length-1 combinations.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GmReport {
    #[serde(serialize_with = "crate::serde_bigint")]
    pub n: BigInt,
    pub q1_x_negative: bool,
    /// `Some(r)` with `x(Q2) = r^2`.
    pub q2_x_square_root: Option<String>,
    /// First relation `a Q1 = b Q2` found, if any.
    pub relation: Option<(i64, i64)>,
    pub relation_bound: u32,
}

impl GmReport {
    pub fn passed(&self) -> bool {
        self.q1_x_negative && self.q2_x_square_root.is_some() && self.relation.is_none()
    }
}

impl std::fmt::Display for GmReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mark = |ok: bool| if ok { "PASS" } else { "FAIL" };
        writeln!(f, "curve y^2 = x^3 - {}x", self.n)?;
        writeln!(f, "on curve: PASS")?;
        writeln!(f, "x(Q1) < 0: {}", mark(self.q1_x_negative))?;
        match &self.q2_x_square_root {
            Some(r) => writeln!(f, "x(Q2) square: PASS (x(Q2) = ({r})^2)")?,
            None => writeln!(f, "x(Q2) square: FAIL")?,
        }
        match self.relation {
            None => writeln!(f, "no relation a*Q1 = b*Q2, 1 <= |a|,|b| <= {}: PASS", self.relation_bound)?,
            Some((a, b)) => writeln!(f, "independence: FAIL (dependent: {a}*Q1 = {b}*Q2)")?,
        }
        write!(f, "overall: {}", mark(self.passed()))
    }
}

/// Check that `Q1`, `Q2` lie on `y^2 = x^3 - N x`, that `x(Q1) < 0`, that
/// `x(Q2)` is a rational square, and that no small relation `a Q1 = b Q2`
/// exists. Points off the curve are a hard error.
pub fn gm_hypotheses_check(
    n: &BigInt,
    q1: &CurvePoint,
    q2: &CurvePoint,
    relation_bound: u32,
) -> Result<GmReport> {
    if !n.is_positive() {
        return Err(Error::Domain { op: "gm_hypotheses_check", reason: format!("need N > 0, got {n}") });
    }
    let curve = WeierstrassCurve::new(BigInt::zero(), BigInt::zero(), BigInt::zero(), -n, BigInt::zero())?;
    let (x1, x2) = match (q1.x(), q2.x()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::InfinityOperand("gm_hypotheses_check")),
    };
    curve.check(q1)?;
    curve.check(q2)?;
    Ok(GmReport {
        n: n.clone(),
        q1_x_negative: x1.is_negative(),
        q2_x_square_root: rational_sqrt(x2).map(|r| r.to_string()),
        relation: find_relation(&curve, q1, q2, relation_bound),
        relation_bound,
    })
}
