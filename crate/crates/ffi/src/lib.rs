//! C ABI over `mordell-core`.
//!
//! Every function returns a [`MordellStatus`]; results come back through
//! out-pointers. Handles are opaque and owned by the caller, who releases
//! them with the matching `*_free`. Strings returned to C are released with
//! [`mordell_string_free`]. After a failure, [`mordell_last_error`] describes
//! it until the next call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use mordell_core::points::{log_distance, point_length};
use mordell_core::search::{hall_ratio, lattice_length_search, LatticeSearch, SearchReport};
use mordell_core::{CurvePoint, Error, FactorBudget, LogDistance, VerdictKind, WeierstrassCurve};
use num_bigint::BigInt;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MordellStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    NotOnCurve = 4,
    SingularCurve = 5,
    Domain = 6,
    BudgetExhausted = 7,
    InfinityOperand = 8,
    NonIntegralModel = 9,
    NoWitness = 10,
    Panic = 11,
}

impl From<&Error> for MordellStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Parse(_) => MordellStatus::Parse,
            Error::NotOnCurve { .. } => MordellStatus::NotOnCurve,
            Error::SingularCurve(_) => MordellStatus::SingularCurve,
            Error::BudgetExhausted { .. } => MordellStatus::BudgetExhausted,
            Error::InfinityOperand(_) => MordellStatus::InfinityOperand,
            Error::NonIntegralModel(_) => MordellStatus::NonIntegralModel,
            Error::NoWitness { .. } => MordellStatus::NoWitness,
            _ => MordellStatus::Domain,
        }
    }
}

/// An elliptic curve in long Weierstrass form with integer coefficients.
pub struct MordellCurve(WeierstrassCurve);

/// A rational point or the point at infinity.
pub struct MordellPoint(CurvePoint);

/// The outcome of a lattice search.
pub struct MordellReport(SearchReport);

/// Parameters for [`mordell_search`]; start from [`mordell_search_options_default`].
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct MordellSearchOptions {
    pub range: u32,
    pub k: u32,
    pub exact_length: bool,
    pub strict_prime: bool,
    /// 0 uses all cores.
    pub threads: u32,
    pub trial_bound: u64,
    pub rho_iterations: u64,
    pub mr_rounds: u32,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

struct Failure(MordellStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure((&e).into(), e.to_string())
    }
}

fn null() -> Failure {
    Failure(MordellStatus::NullPointer, "null pointer argument".into())
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> MordellStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => MordellStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            MordellStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s).to_str().map_err(|e| Failure(MordellStatus::InvalidUtf8, e.to_string()))
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(null)
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

/// Message for the last failure on this thread, or NULL. Owned by the
/// library; valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn mordell_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Release a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn mordell_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse `[a1,a2,a3,a4,a6]`.
///
/// # Safety
/// `literal` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mordell_curve_parse(literal: *const c_char, out: *mut *mut MordellCurve) -> MordellStatus {
    guard(|| {
        let curve: WeierstrassCurve = read_str(literal)?.parse()?;
        write(out, Box::into_raw(Box::new(MordellCurve(curve))))
    })
}

/// # Safety
/// `curve` must come from [`mordell_curve_parse`] or be NULL.
#[no_mangle]
pub unsafe extern "C" fn mordell_curve_free(curve: *mut MordellCurve) {
    if !curve.is_null() {
        drop(Box::from_raw(curve));
    }
}

/// The discriminant as a decimal string (free with [`mordell_string_free`]).
///
/// # Safety
/// `curve` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mordell_curve_discriminant(curve: *const MordellCurve, out: *mut *mut c_char) -> MordellStatus {
    guard(|| {
        let curve = deref(curve)?;
        write(out, to_c_string(curve.0.discriminant().to_string()))
    })
}

/// `log |discriminant|`.
///
/// # Safety
/// `curve` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mordell_curve_log_discriminant(curve: *const MordellCurve, out: *mut f64) -> MordellStatus {
    guard(|| write(out, deref(curve)?.0.invariants().h_e))
}

/// Parse `(x,y)` with integer or `num/den` coordinates, or `inf`.
///
/// # Safety
/// `literal` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mordell_point_parse(literal: *const c_char, out: *mut *mut MordellPoint) -> MordellStatus {
    guard(|| {
        let point: CurvePoint = read_str(literal)?.parse()?;
        write(out, Box::into_raw(Box::new(MordellPoint(point))))
    })
}

/// # Safety
/// `point` must come from this library or be NULL.
#[no_mangle]
pub unsafe extern "C" fn mordell_point_free(point: *mut MordellPoint) {
    if !point.is_null() {
        drop(Box::from_raw(point));
    }
}

/// Render a point as `(x, y)` or `inf`.
///
/// # Safety
/// `point` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mordell_point_to_string(point: *const MordellPoint, out: *mut *mut c_char) -> MordellStatus {
    guard(|| write(out, to_c_string(deref(point)?.0.to_string())))
}

/// Whether `point` lies on `curve`.
///
/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mordell_curve_contains(
    curve: *const MordellCurve,
    point: *const MordellPoint,
    out: *mut bool,
) -> MordellStatus {
    guard(|| write(out, deref(curve)?.0.is_on_curve(&deref(point)?.0)))
}

/// `p + q`; both must lie on the curve.
///
/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mordell_curve_add(
    curve: *const MordellCurve,
    p: *const MordellPoint,
    q: *const MordellPoint,
    out: *mut *mut MordellPoint,
) -> MordellStatus {
    guard(|| {
        let (curve, p, q) = (&deref(curve)?.0, &deref(p)?.0, &deref(q)?.0);
        curve.check(p)?;
        curve.check(q)?;
        write(out, Box::into_raw(Box::new(MordellPoint(curve.add(p, q)))))
    })
}

/// `m p`; `p` must lie on the curve.
///
/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mordell_curve_scalar_mul(
    curve: *const MordellCurve,
    m: i64,
    p: *const MordellPoint,
    out: *mut *mut MordellPoint,
) -> MordellStatus {
    guard(|| {
        let (curve, p) = (&deref(curve)?.0, &deref(p)?.0);
        curve.check(p)?;
        write(out, Box::into_raw(Box::new(MordellPoint(curve.scalar_mul(m, p)))))
    })
}

/// Number of distinct primes dividing the denominator root `B` of `point`,
/// under the default factoring budget. `exact` is false when `count` is
/// only a lower bound.
///
/// # Safety
/// `point` must be live; `count` and `exact` writable.
#[no_mangle]
pub unsafe extern "C" fn mordell_point_length(
    point: *const MordellPoint,
    count: *mut u32,
    exact: *mut bool,
) -> MordellStatus {
    guard(|| {
        let verdict = point_length(&deref(point)?.0, &FactorBudget::default())?;
        write(count, verdict.count)?;
        write(exact, verdict.kind == VerdictKind::Exact)
    })
}

/// Logarithmic distance of `point` from `reference` (which may be `inf`).
/// When the two share an `x`-coordinate, `infinite` is set and `out` is +inf.
///
/// # Safety
/// Handles must be live; `out` and `infinite` writable.
#[no_mangle]
pub unsafe extern "C" fn mordell_log_distance(
    reference: *const MordellPoint,
    point: *const MordellPoint,
    out: *mut f64,
    infinite: *mut bool,
) -> MordellStatus {
    guard(|| match log_distance(&deref(reference)?.0, &deref(point)?.0)? {
        LogDistance::Finite(v) => {
            write(out, v)?;
            write(infinite, false)
        }
        LogDistance::InfiniteProximity => {
            write(out, f64::INFINITY)?;
            write(infinite, true)
        }
    })
}

/// `log x` and `log x / (2 log |d|)` for an integral point of `y^2 = x^3 + d`,
/// with `d`, `x` as decimal strings.
///
/// # Safety
/// Strings must be valid C strings; `log_x` and `ratio` writable.
#[no_mangle]
pub unsafe extern "C" fn mordell_hall_ratio(
    d: *const c_char,
    x: *const c_char,
    log_x: *mut f64,
    ratio: *mut f64,
) -> MordellStatus {
    guard(|| {
        let parse = |s: &str| {
            s.trim().parse::<BigInt>().map_err(|e| Failure(MordellStatus::Parse, format!("{s:?}: {e}")))
        };
        let record = hall_ratio(&parse(read_str(d)?)?, &parse(read_str(x)?)?)?;
        write(log_x, record.log_x)?;
        write(ratio, record.ratio)
    })
}

/// Defaults: range 30, length at most 1, default factoring budget.
#[no_mangle]
pub extern "C" fn mordell_search_options_default() -> MordellSearchOptions {
    let search = LatticeSearch::default();
    MordellSearchOptions {
        range: search.range,
        k: search.k,
        exact_length: search.exact_length,
        strict_prime: search.strict_prime,
        threads: 0,
        trial_bound: search.budget.trial_bound,
        rho_iterations: search.budget.rho_iterations,
        mr_rounds: search.budget.mr_rounds,
    }
}

/// Lattice search over `m p + n q`; `reference` may be `inf`. The
/// `n_cosets` torsion points in `cosets` (may be NULL when 0) add the
/// translates `m p + n q + t` to the grid.
///
/// # Safety
/// Handles must be live, `cosets` must point to `n_cosets` live handles,
/// `options` readable and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mordell_search(
    curve: *const MordellCurve,
    p: *const MordellPoint,
    q: *const MordellPoint,
    reference: *const MordellPoint,
    cosets: *const *const MordellPoint,
    n_cosets: usize,
    options: *const MordellSearchOptions,
    out: *mut *mut MordellReport,
) -> MordellStatus {
    guard(|| {
        let o = *deref(options)?;
        let translates = if n_cosets == 0 {
            Vec::new()
        } else {
            if cosets.is_null() {
                return Err(null());
            }
            std::slice::from_raw_parts(cosets, n_cosets)
                .iter()
                .map(|&t| deref(t).map(|t| t.0.clone()))
                .collect::<Result<Vec<_>, _>>()?
        };
        let params = LatticeSearch {
            range: o.range,
            k: o.k,
            reference: deref(reference)?.0.clone(),
            budget: FactorBudget { trial_bound: o.trial_bound, rho_iterations: o.rho_iterations, mr_rounds: o.mr_rounds },
            cosets: translates,
            exact_length: o.exact_length,
            strict_prime: o.strict_prime,
            threads: (o.threads > 0).then_some(o.threads as usize),
        };
        let report = lattice_length_search(&deref(curve)?.0, &deref(p)?.0, &deref(q)?.0, &params)?;
        write(out, Box::into_raw(Box::new(MordellReport(report))))
    })
}

/// # Safety
/// `report` must come from [`mordell_search`] or be NULL.
#[no_mangle]
pub unsafe extern "C" fn mordell_report_free(report: *mut MordellReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Largest distance over counted rows and its ratio to `log |discriminant|`.
/// `found` is false (and the values NaN) when no row qualified.
///
/// # Safety
/// `report` must be live; out-pointers writable.
#[no_mangle]
pub unsafe extern "C" fn mordell_report_h_bar(
    report: *const MordellReport,
    h_bar: *mut f64,
    ratio: *mut f64,
    found: *mut bool,
) -> MordellStatus {
    guard(|| {
        let r = &deref(report)?.0;
        write(h_bar, r.h_bar.unwrap_or(f64::NAN))?;
        write(ratio, r.ratio.unwrap_or(f64::NAN))?;
        write(found, r.h_bar.is_some())
    })
}

/// Rows whose length was left undecided by the factoring budget.
///
/// # Safety
/// `report` must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mordell_report_unresolved(report: *const MordellReport, out: *mut usize) -> MordellStatus {
    guard(|| write(out, deref(report)?.0.coverage.unresolved_count))
}

/// JSON summary (free with [`mordell_string_free`]).
///
/// # Safety
/// `report` must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mordell_report_json(report: *const MordellReport, out: *mut *mut c_char) -> MordellStatus {
    guard(|| write(out, to_c_string(deref(report)?.0.to_json())))
}

/// Per-row CSV (free with [`mordell_string_free`]).
///
/// # Safety
/// `report` must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mordell_report_csv(report: *const MordellReport, out: *mut *mut c_char) -> MordellStatus {
    guard(|| write(out, to_c_string(deref(report)?.0.to_csv())))
}
