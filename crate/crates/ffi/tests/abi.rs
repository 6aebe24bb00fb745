use std::ffi::{CStr, CString};
use std::ptr;

use b3rep_ffi::*;

fn last_error() -> String {
    let p = b3rep_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { b3rep_string_free(p) };
    s
}

fn build(dim: usize, eigs: &[&str], root: Option<&str>) -> (B3Status, *mut B3Rep) {
    let owned: Vec<CString> = eigs.iter().map(|s| CString::new(*s).unwrap()).collect();
    let ptrs: Vec<_> = owned.iter().map(|s| s.as_ptr()).collect();
    let root = root.map(|r| CString::new(r).unwrap());
    let mut out = ptr::null_mut();
    let st = unsafe { b3rep_rep_build(dim, ptrs.as_ptr(), ptrs.len(), root.as_ref().map_or(ptr::null(), |r| r.as_ptr()), ptr::null(), &mut out) };
    (st, out)
}

#[test]
fn build_classify_roundtrip() {
    let (st, rep) = build(3, &["1", "1", "-1"], None);
    assert_eq!(st, B3Status::Ok);
    assert!(b3rep_last_error().is_null());
    assert_eq!(unsafe { b3rep_rep_dim(rep) }, 3);
    let mut braid = false;
    assert_eq!(unsafe { b3rep_rep_verify_braid(rep, &mut braid) }, B3Status::Ok);
    assert!(braid);

    let mut report = ptr::null_mut();
    assert_eq!(unsafe { b3rep_classify(rep, true, &mut report) }, B3Status::Ok);
    let mut simple = true;
    assert_eq!(unsafe { b3rep_report_is_simple(report, &mut simple) }, B3Status::Ok);
    assert!(!simple);
    let mut js = ptr::null_mut();
    assert_eq!(unsafe { b3rep_report_to_json(report, &mut js) }, B3Status::Ok);
    assert!(take_string(js).contains("l1^2+l2*l3"));
    unsafe { b3rep_report_free(report) };

    let mut js = ptr::null_mut();
    assert_eq!(unsafe { b3rep_rep_to_json(rep, &mut js) }, B3Status::Ok);
    let text = CString::new(take_string(js)).unwrap();
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { b3rep_rep_from_json(text.as_ptr(), &mut back) }, B3Status::Ok);
    assert_eq!(unsafe { b3rep_rep_dim(back) }, 3);
    unsafe {
        b3rep_rep_free(back);
        b3rep_rep_free(rep);
    }
}

#[test]
fn derived_last_eigenvalue_and_symbolic() {
    let (st, rep) = build(5, &["1", "2", "3", "4"], Some("2"));
    assert_eq!(st, B3Status::Ok);
    unsafe { b3rep_rep_free(rep) };
    let mut rep = ptr::null_mut();
    assert_eq!(unsafe { b3rep_rep_build_symbolic(4, &mut rep) }, B3Status::Ok);
    let mut braid = false;
    assert_eq!(unsafe { b3rep_rep_verify_braid(rep, &mut braid) }, B3Status::Ok);
    assert!(braid);
    unsafe { b3rep_rep_free(rep) };
}

#[test]
fn error_codes() {
    let (st, rep) = build(4, &["1", "2", "3"], Some("0"));
    assert_eq!(st, B3Status::Constraint);
    assert!(rep.is_null());
    assert!(last_error().contains("nonzero"));

    let (st, _) = build(2, &["1", "1/"], None);
    assert_eq!(st, B3Status::Parse);

    let (st, _) = build(6, &["1"; 6], None);
    assert_eq!(st, B3Status::Unsupported);

    let mut out = ptr::null_mut();
    assert_eq!(unsafe { b3rep_rep_from_json(ptr::null(), &mut out) }, B3Status::NullPointer);
    let bad = CString::new("{").unwrap();
    assert_eq!(unsafe { b3rep_rep_from_json(bad.as_ptr(), &mut out) }, B3Status::Parse);
    assert_eq!(unsafe { b3rep_rep_dim(ptr::null()) }, 0);
    unsafe {
        b3rep_rep_free(ptr::null_mut());
        b3rep_string_free(ptr::null_mut());
    }
}

#[test]
fn dims_series() {
    let series = CString::new("bcd").unwrap();
    let mut js = ptr::null_mut();
    let mut all = false;
    assert_eq!(unsafe { b3rep_dims(series.as_ptr(), &mut js, &mut all) }, B3Status::Ok);
    assert!(all);
    assert!(take_string(js).contains("\"reports\""));
    let foo = CString::new("foo").unwrap();
    assert_eq!(unsafe { b3rep_dims(foo.as_ptr(), &mut js, &mut all) }, B3Status::Parse);
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/b3rep.h")).unwrap();
    for name in [
        "b3rep_last_error",
        "b3rep_rep_build",
        "b3rep_rep_build_symbolic",
        "b3rep_rep_from_json",
        "b3rep_rep_to_json",
        "b3rep_rep_dim",
        "b3rep_rep_verify_braid",
        "b3rep_rep_free",
        "b3rep_classify",
        "b3rep_report_is_simple",
        "b3rep_report_to_json",
        "b3rep_report_free",
        "b3rep_dims",
        "b3rep_string_free",
        "B3_STATUS_CONSTRAINT",
        "typedef struct B3Rep B3Rep",
    ] {
        assert!(header.contains(name), "{name}");
    }
}
