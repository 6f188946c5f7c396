//! The C ABI driven as a foreign caller would.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use serde_json::Value;

use poisson_forge_ffi::*;

const CASE8: &str = r#"{"k":["0","0","1"],"A":[["2","0","0"],["0","2","0"],["0","0","0"]]}"#;
const BOOK: &str = r#"{"k":[0,0,1],"A":[[0,0,0],[0,0,0],[0,0,0]]}"#;
const SO3: &str = r#"{"n":3,"grade":2,"components":{"1,2":{"vars":3,"terms":[{"exp":[0,0,1],"coef":1}]},"1,3":{"vars":3,"terms":[{"exp":[0,1,0],"coef":-1}]},"2,3":{"vars":3,"terms":[{"exp":[1,0,0],"coef":1}]}}}"#;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

/// Takes ownership of a returned string.
fn take(s: *mut c_char) -> Value {
    assert!(!s.is_null());
    let v = serde_json::from_str(unsafe { CStr::from_ptr(s) }.to_str().unwrap()).unwrap();
    unsafe { pf_string_free(s) };
    v
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(pf_last_error()) }.to_str().unwrap().to_string()
}

fn pair(json: &str) -> *mut PfLinearPair {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { pf_linear_pair_from_json(c(json).as_ptr(), &mut p) }, PfStatus::Ok, "{}", last_error());
    p
}

fn field(json: &str) -> *mut PfField {
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { pf_field_from_json(c(json).as_ptr(), &mut f) }, PfStatus::Ok, "{}", last_error());
    f
}

#[test]
fn pair_round_trip_and_classify() {
    let p = pair(CASE8);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { pf_linear_pair_to_json(p, &mut out) }, PfStatus::Ok);
    let encoded = take(out);
    assert_eq!(encoded, serde_json::from_str::<Value>(CASE8).unwrap());

    let mut case = 0u8;
    assert_eq!(unsafe { pf_classify(p, &mut case, &mut out) }, PfStatus::Ok);
    assert_eq!(case, 8);
    let cls = take(out);
    assert_eq!(cls["case"], 8);
    assert_eq!(cls["a_squared"], "4");
    assert_eq!(last_error(), "");
    unsafe { pf_linear_pair_free(p) };
}

#[test]
fn deformations() {
    let p = pair(BOOK);
    let mut out = ptr::null_mut();
    let k = c("[[1,0,0],[0,2,0],[0,0,-3]]");
    assert_eq!(unsafe { pf_deform_solve(p, k.as_ptr(), &mut out) }, PfStatus::Ok);
    let space = take(out);
    assert_eq!(space["basis"], serde_json::json!([]));
    assert_eq!(space["particular"]["terms"], serde_json::json!([{"exp": [1, 1, 1], "coef": "1/6"}]));

    let qp = r#"{"K":[[1,0,0],[0,2,0],[0,0,-3]],"F":{"vars":3,"terms":[{"exp":[1,1,1],"coef":"1/6"}]}}"#;
    let mut ok = false;
    assert_eq!(unsafe { pf_deform_check(p, c(qp).as_ptr(), &mut ok) }, PfStatus::Ok);
    assert!(ok);
    assert_eq!(unsafe { pf_deform_check(p, c(&qp.replace("1/6", "1/3")).as_ptr(), &mut ok) }, PfStatus::Ok);
    assert!(!ok);

    let not_traceless = c("[[1,0,0],[0,1,0],[0,0,1]]");
    assert_eq!(unsafe { pf_deform_solve(p, not_traceless.as_ptr(), &mut out) }, PfStatus::DomainError);
    assert!(!last_error().is_empty());
    unsafe { pf_linear_pair_free(p) };
}

#[test]
fn calculus_on_so3() {
    let pi = field(SO3);
    let mut poisson = false;
    assert_eq!(unsafe { pf_is_poisson(pi, &mut poisson) }, PfStatus::Ok);
    assert!(poisson);

    let mut b = ptr::null_mut();
    assert_eq!(unsafe { pf_schouten(pi, pi, &mut b) }, PfStatus::Ok);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { pf_field_to_json(b, &mut out) }, PfStatus::Ok);
    let bracket = take(out);
    assert_eq!(bracket["grade"], 3);
    assert_eq!(bracket["components"], serde_json::json!({}));

    assert_eq!(unsafe { pf_field_to_json(pi, &mut out) }, PfStatus::Ok);
    // Coefficients come back in canonical string form.
    let canonical = SO3.replace(r#""coef":1"#, r#""coef":"1""#).replace(r#""coef":-1"#, r#""coef":"-1""#);
    assert_eq!(take(out), serde_json::from_str::<Value>(&canonical).unwrap());
    unsafe {
        pf_field_free(b);
        pf_field_free(pi);
    }
}

#[test]
fn error_reporting() {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { pf_linear_pair_from_json(c("{\"k\": [1").as_ptr(), &mut p) }, PfStatus::ParseError);
    assert!(last_error().contains("JSON"));
    assert_eq!(unsafe { pf_linear_pair_from_json(c(CASE8).as_ptr(), ptr::null_mut()) }, PfStatus::NullPointer);

    let mut case = 0u8;
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { pf_classify(ptr::null(), &mut case, &mut out) }, PfStatus::NullPointer);
    assert!(out.is_null());

    let bad_utf8 = [0xffu8, 0xfe, 0];
    assert_eq!(unsafe { pf_linear_pair_from_json(bad_utf8.as_ptr().cast(), &mut p) }, PfStatus::InvalidUtf8);

    let mut all = true;
    assert_eq!(unsafe { pf_verify_paper(c("{ not json").as_ptr(), 1, &mut all, &mut out) }, PfStatus::ParseError);
    // Releasing null is a no-op.
    unsafe {
        pf_string_free(ptr::null_mut());
        pf_linear_pair_free(ptr::null_mut());
        pf_field_free(ptr::null_mut());
    }
}

#[test]
fn errors_are_per_thread() {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { pf_linear_pair_from_json(c("[").as_ptr(), &mut p) }, PfStatus::ParseError);
    let other = std::thread::spawn(last_error).join().unwrap();
    assert_eq!(other, "");
    assert!(!last_error().is_empty());
}

#[test]
fn header_is_valid_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/poisson_forge.h");
    let text = std::fs::read_to_string(header).expect("header generated by the build script");
    for name in ["pf_classify", "pf_deform_solve", "pf_verify_paper", "PF_STATUS_OK", "PfLinearPair"] {
        assert!(text.contains(name), "{name} missing from header");
    }
    // Compile the header when a C compiler is around.
    let probe = std::process::Command::new("cc").args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-x", "c", header]).output();
    match probe {
        Ok(out) => assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr)),
        Err(_) => eprintln!("no C compiler found; header syntax not checked"),
    }
}
