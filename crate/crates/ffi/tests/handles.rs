use std::ffi::{c_char, CStr, CString};
use std::ptr;

use seifert_ffi::*;

fn parse(text: &str) -> *mut SeifertSymbolHandle {
    let c = CString::new(text).unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { seifert_symbol_parse(c.as_ptr(), &mut h) }, SeifertStatus::Ok);
    assert!(!h.is_null());
    h
}

fn take(s: *mut c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { seifert_string_free(s) };
    out
}

fn last_error() -> Option<String> {
    let p = seifert_last_error();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned())
}

fn text(h: *const SeifertSymbolHandle) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { seifert_symbol_to_string(h, &mut s) }, SeifertStatus::Ok);
    take(s)
}

#[test]
fn parse_errors_set_status_and_message() {
    let c = CString::new("SFS[0; o 0; (4,2)]").unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { seifert_symbol_parse(c.as_ptr(), &mut h) }, SeifertStatus::Parse);
    assert!(h.is_null());
    assert!(last_error().unwrap().contains("gcd"));
    let bytes = b"SFS[\xff]\0";
    assert_eq!(unsafe { seifert_symbol_parse(bytes.as_ptr().cast(), &mut h) }, SeifertStatus::InvalidUtf8);
    // a later success clears the message
    let ok = parse("SFS[0; o 1;]");
    assert!(text(ok).starts_with("SFS["));
    assert_eq!(last_error(), None);
    unsafe { seifert_symbol_free(ok) };
}

#[test]
fn null_arguments_are_rejected() {
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { seifert_symbol_parse(ptr::null(), &mut h) }, SeifertStatus::NullPointer);
    let c = CString::new("SFS[0; o 1;]").unwrap();
    assert_eq!(unsafe { seifert_symbol_parse(c.as_ptr(), ptr::null_mut()) }, SeifertStatus::NullPointer);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { seifert_invariants_json(ptr::null(), &mut s) }, SeifertStatus::NullPointer);
    assert!(!unsafe { seifert_symbol_is_closed(ptr::null()) });
    assert_eq!(unsafe { seifert_verdict_k(ptr::null()) }, 0);
    assert!(unsafe { seifert_verdict_notes(ptr::null()) }.is_null());
    unsafe {
        seifert_symbol_free(ptr::null_mut());
        seifert_verdict_free(ptr::null_mut());
        seifert_string_free(ptr::null_mut());
    }
}

#[test]
fn symbol_transformations() {
    let h = parse("SFS[0; o 0; (3,4)(2,-1)]");
    let mut n = ptr::null_mut();
    assert_eq!(unsafe { seifert_symbol_normalize(h, &mut n) }, SeifertStatus::Ok);
    assert_eq!(text(n), "SFS[0; o 0; (3,1)(2,1)]");
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { seifert_symbol_canonical_form(h, &mut c) }, SeifertStatus::Ok);
    let expected: seifert::SeifertSymbol = "SFS[0; o 0; (3,4)(2,-1)]".parse().unwrap();
    assert_eq!(text(c), expected.canonical_form().to_string());
    assert!(unsafe { seifert_symbol_is_closed(h) });
    let (mut num, mut den) = (0i64, 0i64);
    assert_eq!(unsafe { seifert_symbol_euler_number(h, &mut num, &mut den) }, SeifertStatus::Ok);
    assert_eq!((num, den), (-5, 6));
    unsafe {
        seifert_symbol_free(h);
        seifert_symbol_free(n);
        seifert_symbol_free(c);
    }
}

#[test]
fn json_outputs_match_library() {
    let h = parse("SFS[-2; o 1;]");
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { seifert_invariants_json(h, &mut s) }, SeifertStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(v["geometry"], "Nil");
    assert_eq!(v["h1"]["torsion"], serde_json::json!([2]));
    assert_eq!(unsafe { seifert_fingerprint_json(h, 3, 8, &mut s) }, SeifertStatus::Ok);
    let f: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(f["depth"]["max_index"], 3);
    unsafe { seifert_symbol_free(h) };

    let m = parse("SFS[-1; o 0; (5,1)(5,1)(5,3)]");
    assert_eq!(unsafe { seifert_partners_json(m, &mut s) }, SeifertStatus::Ok);
    let partners: Vec<String> = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(partners.len(), 2);
    unsafe { seifert_symbol_free(m) };
}

#[test]
fn decide_through_handles() {
    let (a, b) = (parse("SFS[-2; o 1;]"), parse("SFS[-3; o 1;]"));
    let mut v = ptr::null_mut();
    assert_eq!(unsafe { seifert_decide(a, b, &mut v) }, SeifertStatus::Ok);
    let mut kind = SeifertVerdictKind::Homeomorphic;
    assert_eq!(unsafe { seifert_verdict_kind(v, &mut kind) }, SeifertStatus::Ok);
    assert_eq!(kind, SeifertVerdictKind::NotEquivalent);
    assert_eq!(unsafe { seifert_verdict_separator(v) }, SeifertSeparator::H1);
    let notes = unsafe { CStr::from_ptr(seifert_verdict_notes(v)) }.to_str().unwrap();
    assert!(!notes.is_empty());
    unsafe { seifert_verdict_free(v) };

    let (c, d) = (parse("SFS[1; o 0; (4,1)]"), parse("SFS[1; o 0; (3,2)]"));
    assert_eq!(unsafe { seifert_decide_with_depth(c, d, 3, 12, &mut v) }, SeifertStatus::Ok);
    assert!(unsafe { seifert_verdict_inconclusive(v) });
    unsafe { seifert_verdict_free(v) };

    let bounded = parse("SFS[0; o 0; bd 1; (2,1)]");
    assert_eq!(unsafe { seifert_decide(a, bounded, &mut v) }, SeifertStatus::MixedBoundary);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { seifert_partners_json(bounded, &mut s) }, SeifertStatus::BoundedSymbol);
    let (mut num, mut den) = (0i64, 0i64);
    assert_eq!(unsafe { seifert_symbol_euler_number(bounded, &mut num, &mut den) }, SeifertStatus::BoundedSymbol);
    assert_eq!(unsafe { seifert_fingerprint_json(a, 40, 0, &mut s) }, SeifertStatus::CapExceeded);
    unsafe {
        for h in [a, b, c, d, bounded] {
            seifert_symbol_free(h);
        }
    }
}

#[test]
fn errors_are_thread_local() {
    let c = CString::new("nonsense").unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { seifert_symbol_parse(c.as_ptr(), &mut h) }, SeifertStatus::Parse);
    std::thread::spawn(|| assert_eq!(last_error(), None)).join().unwrap();
    assert!(last_error().is_some());
}
