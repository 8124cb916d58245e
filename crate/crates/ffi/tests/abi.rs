use std::ffi::{CStr, CString};
use std::ptr;

use mordell_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    mordell_string_free(s);
    out
}

unsafe fn parse_point(s: &str) -> *mut MordellPoint {
    let mut p = ptr::null_mut();
    assert_eq!(mordell_point_parse(c(s).as_ptr(), &mut p), MordellStatus::Ok);
    p
}

unsafe fn parse_curve(s: &str) -> *mut MordellCurve {
    let mut e = ptr::null_mut();
    assert_eq!(mordell_curve_parse(c(s).as_ptr(), &mut e), MordellStatus::Ok);
    e
}

#[test]
fn curve_and_point_round_trip() {
    unsafe {
        let e = parse_curve("[0,0,1,-13,18]");
        let mut disc = ptr::null_mut();
        assert_eq!(mordell_curve_discriminant(e, &mut disc), MordellStatus::Ok);
        assert_eq!(take_string(disc).trim_start_matches('-'), "3275");
        let mut h = 0.0;
        assert_eq!(mordell_curve_log_discriminant(e, &mut h), MordellStatus::Ok);
        assert!((h - 3275f64.ln()).abs() < 1e-12);

        let p = parse_point(" ( 49/4 , -217/8 ) ");
        let mut s = ptr::null_mut();
        assert_eq!(mordell_point_to_string(p, &mut s), MordellStatus::Ok);
        assert_eq!(take_string(s), "(49/4, -217/8)");
        mordell_point_free(p);
        mordell_curve_free(e);
    }
}

#[test]
fn group_law() {
    unsafe {
        let e = parse_curve("[0,0,0,0,15]");
        let p = parse_point("(1,4)");
        let q = parse_point("(1/4,31/8)");
        let mut sum = ptr::null_mut();
        assert_eq!(mordell_curve_add(e, p, q, &mut sum), MordellStatus::Ok);
        let mut s = ptr::null_mut();
        mordell_point_to_string(sum, &mut s);
        assert_eq!(take_string(s), "(-11/9, -98/27)");

        let mut count = 0;
        let mut exact = false;
        assert_eq!(mordell_point_length(sum, &mut count, &mut exact), MordellStatus::Ok);
        assert_eq!((count, exact), (1, true));

        let mut on = false;
        assert_eq!(mordell_curve_contains(e, sum, &mut on), MordellStatus::Ok);
        assert!(on);

        let mut twice = ptr::null_mut();
        assert_eq!(mordell_curve_scalar_mul(e, 2, p, &mut twice), MordellStatus::Ok);
        let mut doubled = ptr::null_mut();
        assert_eq!(mordell_curve_add(e, p, p, &mut doubled), MordellStatus::Ok);
        let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
        mordell_point_to_string(twice, &mut a);
        mordell_point_to_string(doubled, &mut b);
        assert_eq!(take_string(a), take_string(b));

        for h in [sum, twice, doubled, p, q] {
            mordell_point_free(h);
        }
        mordell_curve_free(e);
    }
}

#[test]
fn error_codes_and_messages() {
    unsafe {
        let mut e = ptr::null_mut();
        assert_eq!(mordell_curve_parse(c("[0,0,0,0,0]").as_ptr(), &mut e), MordellStatus::SingularCurve);
        assert!(e.is_null());
        let msg = CStr::from_ptr(mordell_last_error()).to_str().unwrap();
        assert!(msg.contains("singular"), "{msg}");

        let mut p = ptr::null_mut();
        assert_eq!(mordell_point_parse(c("(175567.98, 1)").as_ptr(), &mut p), MordellStatus::Parse);
        assert_eq!(mordell_point_parse(ptr::null(), &mut p), MordellStatus::NullPointer);

        let e = parse_curve("[0,0,0,0,15]");
        let off = parse_point("(1,1)");
        let on = parse_point("(1,4)");
        let mut sum = ptr::null_mut();
        assert_eq!(mordell_curve_add(e, off, on, &mut sum), MordellStatus::NotOnCurve);
        assert_eq!(mordell_curve_add(e, on, on, &mut sum), MordellStatus::Ok);
        assert!(mordell_last_error().is_null());

        let (mut log_x, mut ratio) = (0.0, 0.0);
        assert_eq!(
            mordell_hall_ratio(c("17").as_ptr(), c("5235").as_ptr(), &mut log_x, &mut ratio),
            MordellStatus::NoWitness
        );
        assert_eq!(
            mordell_hall_ratio(c("17").as_ptr(), c("5234").as_ptr(), &mut log_x, &mut ratio),
            MordellStatus::Ok
        );
        assert!((log_x - 8.562).abs() < 1e-3 && (ratio - 1.511).abs() < 1e-3);

        let inf = parse_point("inf");
        let mut h = 0.0;
        let mut infinite = true;
        assert_eq!(mordell_log_distance(inf, sum, &mut h, &mut infinite), MordellStatus::Ok);
        assert!(!infinite);
        let mut same = false;
        assert_eq!(mordell_log_distance(on, on, &mut h, &mut same), MordellStatus::Ok);
        assert!(same && h.is_infinite());
        assert_eq!(mordell_log_distance(on, inf, &mut h, &mut same), MordellStatus::InfinityOperand);

        for h in [off, on, sum, inf] {
            mordell_point_free(h);
        }
        mordell_curve_free(e);
    }
}

#[test]
fn lattice_search_report() {
    unsafe {
        let e = parse_curve("[0,0,0,0,15]");
        let p = parse_point("(1,4)");
        let q = parse_point("(1/4,31/8)");
        let inf = parse_point("inf");
        let mut options = mordell_search_options_default();
        assert_eq!(options.range, 30);
        options.range = 6;
        options.threads = 1;
        let mut report = ptr::null_mut();
        assert_eq!(mordell_search(e, p, q, inf, ptr::null(), 0, &options, &mut report), MordellStatus::Ok);
        let (mut h_bar, mut ratio, mut found) = (0.0, 0.0, false);
        assert_eq!(mordell_report_h_bar(report, &mut h_bar, &mut ratio, &mut found), MordellStatus::Ok);
        assert!(found && h_bar > 0.0 && (ratio - h_bar / 97200f64.ln()).abs() < 1e-12);
        let mut unresolved = 1;
        assert_eq!(mordell_report_unresolved(report, &mut unresolved), MordellStatus::Ok);
        assert_eq!(unresolved, 0);

        let mut json = ptr::null_mut();
        assert_eq!(mordell_report_json(report, &mut json), MordellStatus::Ok);
        assert!(take_string(json).contains("\"h_bar\""));
        let mut csv = ptr::null_mut();
        assert_eq!(mordell_report_csv(report, &mut csv), MordellStatus::Ok);
        let csv = take_string(csv);
        assert!(csv.starts_with("m,n,B_digits,length,h\n"));
        assert_eq!(csv.lines().count(), 1 + 13 * 13 - 1);

        options.range = 0;
        let mut bad = ptr::null_mut();
        assert_eq!(mordell_search(e, p, q, inf, ptr::null(), 0, &options, &mut bad), MordellStatus::Domain);
        assert_eq!(mordell_search(e, p, q, inf, ptr::null(), 2, &options, &mut bad), MordellStatus::NullPointer);

        mordell_report_free(report);
        for h in [p, q, inf] {
            mordell_point_free(h);
        }
        mordell_curve_free(e);
    }
}

#[test]
fn header_declares_every_export() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let header = std::fs::read_to_string(format!("{dir}/include/mordell.h")).unwrap();
    let source = std::fs::read_to_string(format!("{dir}/src/lib.rs")).unwrap();
    let mut exported = 0;
    for line in source.lines() {
        let Some(rest) = line.split("extern \"C\" fn ").nth(1) else { continue };
        let name = rest.split('(').next().unwrap();
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
        exported += 1;
    }
    assert!(exported >= 20);
    for ty in ["MordellCurve", "MordellPoint", "MordellReport", "MordellSearchOptions", "MORDELL_STATUS_OK"] {
        assert!(header.contains(ty), "{ty} missing from header");
    }
}
