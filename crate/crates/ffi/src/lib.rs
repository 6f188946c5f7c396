//! C ABI over `poisson-forge`.
//!
//! Structures cross the boundary as JSON strings (the encodings of
//! `poisson_forge::io`) or as opaque handles. Every function returns a
//! [`PfStatus`]; on failure the message is kept per thread and can be fetched
//! with [`pf_last_error`]. Strings handed out must be released with
//! [`pf_string_free`], handles with their `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use serde_json::Value;

use poisson_forge::exactnum::{ExtScalar, QMatrix, Rational};
use poisson_forge::io::{
    classification_to_json, linear_pair_from_json, linear_pair_to_json, matrix_from_json, mvf_from_json, mvf_to_json,
    quadratic_pair_from_json, space_to_json,
};
use poisson_forge::linclass::{classify, LinearPair};
use poisson_forge::multivec::{is_poisson, schouten, MultiVectorField};
use poisson_forge::quaddef::{deform_check, solve_f, QuadraticPair};
use poisson_forge::verify::{self, Golden};
use poisson_forge::Error;

/// Outcome of a call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PfStatus {
    Ok = 0,
    /// Well-formed input violating a mathematical precondition.
    DomainError = 1,
    /// Malformed JSON or encoding.
    ParseError = 2,
    NullPointer = 3,
    InvalidUtf8 = 4,
    /// A bug: the library panicked.
    Panic = 5,
}

/// Compatible pair `(k, f)` of a linear Poisson structure on R³.
pub struct PfLinearPair(LinearPair);

/// Polynomial multivector field with rational coefficients.
pub struct PfField(MultiVectorField<Rational>);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', "?")).expect("interior NULs replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(PfStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = if matches!(e, Error::Parse(_)) { PfStatus::ParseError } else { PfStatus::DomainError };
        Failure(status, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> PfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            PfStatus::Ok
        }
        Ok(Err(Failure(s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            PfStatus::Panic
        }
    }
}

fn null() -> Failure {
    Failure(PfStatus::NullPointer, "null pointer argument".into())
}

/// # Safety
/// `s` must be null or a NUL-terminated string.
unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s).to_str().map_err(|e| Failure(PfStatus::InvalidUtf8, e.to_string()))
}

unsafe fn json(s: *const c_char) -> Result<Value, Failure> {
    serde_json::from_str(text(s)?).map_err(|e| Failure(PfStatus::ParseError, format!("invalid JSON: {e}")))
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(v);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, v: &Value) -> Result<(), Failure> {
    let c = CString::new(v.to_string()).expect("JSON has no NULs");
    put(out, c.into_raw())
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(null)
}

/// Message of the last failed call on this thread (empty after success).
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn pf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn pf_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library, released once.
#[no_mangle]
pub unsafe extern "C" fn pf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `{"k": [..], "A": [[..], ..]}` into a new handle.
///
/// # Safety
/// `json_in` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pf_linear_pair_from_json(json_in: *const c_char, out: *mut *mut PfLinearPair) -> PfStatus {
    guard(|| {
        let lp = linear_pair_from_json(&json(json_in)?)?;
        put(out, Box::into_raw(Box::new(PfLinearPair(lp))))
    })
}

/// # Safety
/// `pair` must be null or a handle from this library, released once.
#[no_mangle]
pub unsafe extern "C" fn pf_linear_pair_free(pair: *mut PfLinearPair) {
    if !pair.is_null() {
        drop(Box::from_raw(pair));
    }
}

/// JSON encoding of a pair.
///
/// # Safety
/// `pair` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pf_linear_pair_to_json(pair: *const PfLinearPair, out: *mut *mut c_char) -> PfStatus {
    guard(|| put_string(out, &linear_pair_to_json(&handle(pair)?.0)))
}

/// Standard form: writes the case id and the classification JSON.
///
/// # Safety
/// `pair` must be a live handle; `case_id` and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pf_classify(pair: *const PfLinearPair, case_id: *mut u8, out: *mut *mut c_char) -> PfStatus {
    guard(|| {
        let c = classify(&handle(pair)?.0)?;
        put(case_id, c.label.case_id)?;
        put_string(out, &classification_to_json(&c))
    })
}

/// Cubics `F` making `(K, F)` a deformation of the pair; `k_json` is a
/// traceless rational 3×3 matrix. Writes the solution-space JSON.
///
/// # Safety
/// `pair` must be a live handle, `k_json` a NUL-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn pf_deform_solve(pair: *const PfLinearPair, k_json: *const c_char, out: *mut *mut c_char) -> PfStatus {
    guard(|| {
        let k: QMatrix = matrix_from_json(&json(k_json)?)?;
        put_string(out, &space_to_json(&solve_f(&handle(pair)?.0, &k)?))
    })
}

/// Whether `{"K", "F"}` is a quadratic deformation of the pair.
///
/// # Safety
/// `pair` must be a live handle, `qpair_json` a NUL-terminated string and
/// `result` writable.
#[no_mangle]
pub unsafe extern "C" fn pf_deform_check(pair: *const PfLinearPair, qpair_json: *const c_char, result: *mut bool) -> PfStatus {
    guard(|| {
        let qp: QuadraticPair<ExtScalar> = quadratic_pair_from_json(&json(qpair_json)?)?;
        put(result, deform_check(&handle(pair)?.0, &qp)?)
    })
}

/// Parses `{"n", "grade", "components"}` into a new field handle.
///
/// # Safety
/// `json_in` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pf_field_from_json(json_in: *const c_char, out: *mut *mut PfField) -> PfStatus {
    guard(|| {
        let u = mvf_from_json(&json(json_in)?)?;
        put(out, Box::into_raw(Box::new(PfField(u))))
    })
}

/// # Safety
/// `field` must be null or a handle from this library, released once.
#[no_mangle]
pub unsafe extern "C" fn pf_field_free(field: *mut PfField) {
    if !field.is_null() {
        drop(Box::from_raw(field));
    }
}

/// # Safety
/// `field` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pf_field_to_json(field: *const PfField, out: *mut *mut c_char) -> PfStatus {
    guard(|| put_string(out, &mvf_to_json(&handle(field)?.0)))
}

/// Schouten bracket `[u, v]` as a new handle.
///
/// # Safety
/// `u` and `v` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pf_schouten(u: *const PfField, v: *const PfField, out: *mut *mut PfField) -> PfStatus {
    guard(|| {
        let b = schouten(&handle(u)?.0, &handle(v)?.0)?;
        put(out, Box::into_raw(Box::new(PfField(b))))
    })
}

/// Jacobi identity of a bivector.
///
/// # Safety
/// `field` must be a live handle; `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pf_is_poisson(field: *const PfField, result: *mut bool) -> PfStatus {
    guard(|| put(result, is_poisson(&handle(field)?.0)?))
}

/// Runs the reproduction report (`threads` = 0 for all cores) against the
/// built-in golden data, or the file contents `golden_json` when non-null.
/// Writes the JSON array of items and whether every item passed.
///
/// # Safety
/// `golden_json` must be null or a NUL-terminated string; `all_pass` and
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pf_verify_paper(golden_json: *const c_char, threads: u32, all_pass: *mut bool, out: *mut *mut c_char) -> PfStatus {
    guard(|| {
        let golden = if golden_json.is_null() { Golden::embedded() } else { Golden::parse(text(golden_json)?)? };
        let results = verify::run(&golden, threads as usize);
        put(all_pass, verify::all_pass(&results))?;
        put_string(out, &verify::render_json(&results))
    })
}

#[cfg(test)]
mod tests {
    use std::ptr;

    use super::*;

    fn c(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    fn last_error() -> String {
        unsafe { CStr::from_ptr(pf_last_error()) }.to_str().unwrap().to_string()
    }

    #[test]
    fn status_codes() {
        let mut p = ptr::null_mut();
        let bad = c(r#"{"k":[1,0,0],"A":[[1,0,0],[0,0,0],[0,0,0]]}"#);
        assert_eq!(unsafe { pf_linear_pair_from_json(bad.as_ptr(), &mut p) }, PfStatus::DomainError);
        assert!(last_error().contains("A·k"));
        assert_eq!(unsafe { pf_linear_pair_from_json(c("{").as_ptr(), &mut p) }, PfStatus::ParseError);
        assert_eq!(unsafe { pf_linear_pair_from_json(ptr::null(), &mut p) }, PfStatus::NullPointer);
        assert!(p.is_null());
    }

    #[test]
    fn version_is_static() {
        let v = unsafe { CStr::from_ptr(pf_version()) };
        assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
    }
}
