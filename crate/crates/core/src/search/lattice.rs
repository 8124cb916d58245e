use std::collections::HashSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{is_probable_prime, ExactRational, FactorBudget, LengthVerdict};
use crate::curve::{CurvePoint, WeierstrassCurve};
use crate::error::{Error, Result};
use super::generators::torsion_order;
use crate::points::{canonical_shape, log_distance, point_length_bounded, shape_round_trips, LogDistance};

/// Parameters of a lattice search over `m P + n Q`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LatticeSearch {
    /// Half-width `N` of the grid `|m|, |n| <= N`.
    pub range: u32,
    /// Length bound: rows with length `<= k` (or `== k`) count toward `h_bar`.
    pub k: u32,
    #[serde(serialize_with = "serialize_point")]
    pub reference: CurvePoint,
    pub budget: FactorBudget,
    /// Torsion points `T`; when non-empty the grid also covers every
    /// `m P + n Q + T`, so the result no longer depends on which torsion
    /// coset the generators were taken from.
    #[serde(serialize_with = "serialize_points")]
    pub cosets: Vec<CurvePoint>,
    /// Count rows of length exactly `k` rather than `<= k`.
    pub exact_length: bool,
    /// Count length-1 rows only when `B` itself is prime, not a prime power.
    pub strict_prime: bool,
    /// Worker threads; `None` uses the global pool.
    #[serde(skip)]
    pub threads: Option<usize>,
}

impl Default for LatticeSearch {
    fn default() -> Self {
        LatticeSearch {
            range: 30,
            k: 1,
            reference: CurvePoint::Infinity,
            budget: FactorBudget::default(),
            cosets: Vec::new(),
            exact_length: false,
            strict_prime: false,
            threads: None,
        }
    }
}

fn serialize_point<S: serde::Serializer>(p: &CurvePoint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(p)
}

fn serialize_points<S: serde::Serializer>(ps: &[CurvePoint], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(ps.iter().map(|p| p.to_string()))
}

fn serialize_verdict<S: serde::Serializer>(v: &LengthVerdict, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn serialize_rational<S: serde::Serializer>(q: &ExactRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(q)
}

/// One grid point `m P + n Q (+ T)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchRow {
    pub m: i64,
    pub n: i64,
    /// 0 for the plain lattice, `i` for the translate by the `i`-th coset point.
    pub coset: usize,
    #[serde(serialize_with = "crate::serde_bigint")]
    pub b: BigInt,
    pub b_digits: usize,
    #[serde(serialize_with = "serialize_verdict")]
    pub length: LengthVerdict,
    pub h: LogDistance,
    /// Whether `B` is a probable prime; only evaluated for exact length 1.
    pub b_prime: Option<bool>,
    #[serde(serialize_with = "serialize_rational")]
    pub x: ExactRational,
    /// Whether the row counts toward `h_bar`.
    pub counted: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Coverage {
    pub range: u32,
    pub budget: FactorBudget,
    /// Rows whose length could not be decided against `k` within the budget.
    pub unresolved_count: usize,
    /// Rows sharing `x` with the reference point.
    pub infinite_proximity_count: usize,
    /// Grid points equal to the identity (a relation between generators).
    pub identity_count: usize,
    /// Grid points repeating an earlier one, dropped from `rows`.
    pub duplicate_count: usize,
    pub rows: usize,
    pub counted: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Argmax {
    pub m: i64,
    pub n: i64,
    pub coset: usize,
    pub b_digits: usize,
    #[serde(serialize_with = "crate::serde_bigint")]
    pub b: BigInt,
    #[serde(serialize_with = "serialize_rational")]
    pub x: ExactRational,
}

/// Result of [`lattice_length_search`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchReport {
    #[serde(skip)]
    pub rows: Vec<SearchRow>,
    pub curve: String,
    pub generators: [String; 2],
    pub reference: String,
    pub cosets: Vec<String>,
    pub k: u32,
    pub exact_length: bool,
    pub strict_prime: bool,
    /// Largest `h` over counted rows; `None` when no row qualified.
    pub h_bar: Option<f64>,
    pub h_e: f64,
    pub ratio: Option<f64>,
    pub argmax: Option<Argmax>,
    pub coverage: Coverage,
}

impl SearchReport {
    /// Rows as CSV with header `m,n,B_digits,length,h` (and a trailing
    /// `coset` column when torsion translates were searched).
    pub fn to_csv(&self) -> String {
        let with_coset = !self.cosets.is_empty();
        let mut out = String::from(if with_coset { "m,n,B_digits,length,h,coset\n" } else { "m,n,B_digits,length,h\n" });
        for r in &self.rows {
            let _ = write!(out, "{},{},{},{},{}", r.m, r.n, r.b_digits, r.length, r.h);
            let _ = if with_coset { writeln!(out, ",{}", r.coset) } else { writeln!(out) };
        }
        out
    }

    /// Summary (everything except the rows) as pretty JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Counted rows, in enumeration order.
    pub fn counted_rows(&self) -> impl Iterator<Item = &SearchRow> {
        self.rows.iter().filter(|r| r.counted)
    }
}

/// What one grid point evaluates to before deduplication.
enum Cell {
    Identity,
    Point { row: SearchRow, y: ExactRational },
}

struct Context<'a> {
    curve: &'a WeierstrassCurve,
    params: &'a LatticeSearch,
}

impl LatticeSearch {
    /// Whether a verdict meets the length condition; `None` when undecided.
    pub fn admits(&self, length: &LengthVerdict) -> Option<bool> {
        if !self.exact_length {
            return length.at_most(self.k);
        }
        match length.at_most(self.k) {
            Some(false) => Some(false),
            _ if length.is_exact() => Some(length.count == self.k),
            _ if length.count > self.k => Some(false),
            _ => None,
        }
    }
}

impl Context<'_> {
    fn evaluate(&self, coset: usize, m: i64, n: i64, p: &CurvePoint) -> Result<Cell> {
        let Some((x, y)) = p.coords() else { return Ok(Cell::Identity) };
        let shape = canonical_shape(p)?;
        if !shape_round_trips(p, &shape) || !self.curve.is_on_curve(p) {
            return Err(Error::NotOnCurve { point: p.to_string(), curve: self.curve.to_string() });
        }
        let length = point_length_bounded(p, &self.params.budget, Some(self.params.k))?;
        let h = log_distance(&self.params.reference, p)?;
        let b_prime = (length.is_exact() && length.count == 1)
            .then(|| is_probable_prime(&shape.b, self.params.budget.mr_rounds));
        let within = self.params.admits(&length) == Some(true);
        let strict_ok = !self.params.strict_prime || b_prime != Some(false);
        let finite = matches!(h, LogDistance::Finite(v) if v.is_finite());
        let b_digits = if shape.b.is_zero() { 1 } else { shape.b.to_str_radix(10).len() };
        Ok(Cell::Point {
            row: SearchRow {
                m,
                n,
                coset,
                b: shape.b,
                b_digits,
                length,
                h,
                b_prime,
                x: x.clone(),
                counted: within && strict_ok && finite,
            },
            y: y.clone(),
        })
    }

    /// Row `m` for `n = -N..=N`: one starting point, then repeated `+ Q`.
    fn row(&self, coset: usize, m: i64, start: &CurvePoint, minus_nq: &CurvePoint, q: &CurvePoint) -> Result<Vec<Cell>> {
        let range = self.params.range as i64;
        let mut acc = self.curve.add(start, minus_nq);
        let mut cells = Vec::with_capacity(2 * range as usize + 1);
        for n in -range..=range {
            if coset != 0 || m != 0 || n != 0 {
                cells.push(self.evaluate(coset, m, n, &acc)?);
            }
            if n < range {
                acc = self.curve.add(&acc, q);
            }
        }
        Ok(cells)
    }
}

/// Evaluate every `m P + n Q` with `|m|, |n| <= range`, `(m, n) != (0, 0)`:
/// its denominator `B`, a length verdict, and the logarithmic distance to the
/// reference point. `h_bar` is the largest distance among rows of length
/// `<= k`, normalized by `h_E = log |Δ|`.
///
/// Enumeration runs over `m` then `n`, both ascending, then likewise for
/// each torsion translate in `params.cosets`; ties for `h_bar` go to the
/// first row. Rows with `m < 0` of the plain lattice reuse the row `-m`
/// since `-(mP + nQ)` shares its `x`-coordinate.
pub fn lattice_length_search(
    curve: &WeierstrassCurve,
    p: &CurvePoint,
    q: &CurvePoint,
    params: &LatticeSearch,
) -> Result<SearchReport> {
    if params.range == 0 {
        return Err(Error::Domain { op: "lattice_length_search", reason: "range must be >= 1".into() });
    }
    curve.check(p)?;
    curve.check(q)?;
    if !params.reference.is_infinity() {
        curve.check(&params.reference)?;
    }
    if p.is_infinity() || q.is_infinity() {
        return Err(Error::InfinityOperand("lattice_length_search"));
    }
    for t in &params.cosets {
        curve.check(t)?;
        if t.is_infinity() || torsion_order(curve, t).is_none() {
            return Err(Error::Domain { op: "lattice_length_search", reason: format!("coset point {t} is not torsion") });
        }
    }
    let invariants = curve.invariants();
    if invariants.h_e == 0.0 {
        return Err(Error::ZeroNormalization);
    }
    let range = params.range as i64;
    let mut multiples = Vec::with_capacity(range as usize + 1);
    let mut acc = CurvePoint::Infinity;
    for _ in 0..=range {
        multiples.push(acc.clone());
        acc = curve.add(&acc, p);
    }
    let minus_nq = curve.scalar_mul(-range, q);
    let mut tasks: Vec<(usize, i64, CurvePoint)> =
        multiples.iter().enumerate().map(|(m, mp)| (0, m as i64, mp.clone())).collect();
    for (i, t) in params.cosets.iter().enumerate() {
        for m in -range..=range {
            let mp = &multiples[m.unsigned_abs() as usize];
            let mp = if m < 0 { curve.negate(mp) } else { mp.clone() };
            tasks.push((i + 1, m, curve.add(&mp, t)));
        }
    }
    let ctx = Context { curve, params };
    let compute = || -> Result<Vec<Vec<Cell>>> {
        tasks
            .par_iter()
            .map(|(coset, m, start)| ctx.row(*coset, *m, start, &minus_nq, q))
            .collect()
    };
    let computed = match params.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::Domain { op: "lattice_length_search", reason: e.to_string() })?
            .install(compute)?,
        None => compute()?,
    };

    let mut rows = Vec::new();
    let mut seen: HashSet<(ExactRational, ExactRational)> = HashSet::new();
    let mut coverage = Coverage {
        range: params.range,
        budget: params.budget,
        unresolved_count: 0,
        infinite_proximity_count: 0,
        identity_count: 0,
        duplicate_count: 0,
        rows: 0,
        counted: 0,
    };
    let [a1, _, a3, _, _] = curve.coefficients();
    let plain = (-range..=range).map(|m| (&computed[m.unsigned_abs() as usize], m < 0));
    let translates = computed[range as usize + 1..].iter().map(|cells| (cells, false));
    for (cells, mirrored) in plain.chain(translates) {
        let ordered: Box<dyn Iterator<Item = &Cell>> =
            if mirrored { Box::new(cells.iter().rev()) } else { Box::new(cells.iter()) };
        for cell in ordered {
            match cell {
                Cell::Identity => coverage.identity_count += 1,
                Cell::Point { row, y } => {
                    let mut row = row.clone();
                    let y = if mirrored {
                        row.m = -row.m;
                        row.n = -row.n;
                        -y - &row.x * a1 - a3
                    } else {
                        y.clone()
                    };
                    if !seen.insert((row.x.clone(), y)) {
                        coverage.duplicate_count += 1;
                        continue;
                    }
                    if params.admits(&row.length).is_none() {
                        coverage.unresolved_count += 1;
                    }
                    if row.h == LogDistance::InfiniteProximity {
                        coverage.infinite_proximity_count += 1;
                    }
                    rows.push(row);
                }
            }
        }
    }

    let mut best: Option<&SearchRow> = None;
    for r in rows.iter().filter(|r| r.counted) {
        let h = r.h.finite().expect("counted rows are finite");
        if best.map_or(true, |b| h > b.h.finite().expect("finite")) {
            best = Some(r);
        }
    }
    let h_bar = best.map(|r| r.h.finite().expect("finite"));
    let argmax = best.map(|r| Argmax { m: r.m, n: r.n, coset: r.coset, b_digits: r.b_digits, b: r.b.clone(), x: r.x.clone() });
    coverage.rows = rows.len();
    coverage.counted = rows.iter().filter(|r| r.counted).count();
    Ok(SearchReport {
        curve: curve.to_string(),
        generators: [p.to_string(), q.to_string()],
        reference: params.reference.to_string(),
        cosets: params.cosets.iter().map(|t| t.to_string()).collect(),
        k: params.k,
        exact_length: params.exact_length,
        strict_prime: params.strict_prime,
        h_bar,
        h_e: invariants.h_e,
        ratio: h_bar.map(|h| h / invariants.h_e),
        argmax,
        coverage,
        rows,
    })
}

/// `B` values of a report's counted rows with length exactly 1.
pub fn length_one_denominators(report: &SearchReport) -> Vec<&BigInt> {
    report
        .counted_rows()
        .filter(|r| r.length == LengthVerdict::exact(1) && !r.b.is_one())
        .map(|r| &r.b)
        .collect()
}
