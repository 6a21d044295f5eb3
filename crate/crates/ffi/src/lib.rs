//! C ABI over `schurdet`. Objects are opaque handles released with their `_free` function;
//! every fallible call returns a status code and writes results through out-pointers.
//! Strings returned to the caller are NUL-terminated and released with [`schurdet_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_bigint::BigInt;
use num_rational::BigRational;
use schurdet::cli::{parse_json, run_instance, Options};
use schurdet::hring::HPoly;
use schurdet::identities::{TheoremId, Verdict};
use schurdet::schur::{classical_value, schur9};
use schurdet::shapes::{Partition, SkewShape};
use schurdet::strips::{kreiman, lascoux_pragacz};
use schurdet::Error;

pub const SCHURDET_OK: i32 = 0;
/// A required pointer argument was null.
pub const SCHURDET_ERR_NULL: i32 = -1;
/// A string argument was not valid UTF-8.
pub const SCHURDET_ERR_UTF8: i32 = -2;
/// The library panicked; the message is available from [`schurdet_last_error`].
pub const SCHURDET_ERR_PANIC: i32 = -3;

// Positive codes mirror `schurdet::Error::code`.
pub const SCHURDET_ERR_INVALID_PARTITION: i32 = 1;
pub const SCHURDET_ERR_INVALID_ARITY: i32 = 2;
pub const SCHURDET_ERR_INVALID_CONTENT_SET: i32 = 3;
pub const SCHURDET_ERR_INVALID_MOVE: i32 = 4;
pub const SCHURDET_ERR_PLACEMENT: i32 = 5;
pub const SCHURDET_ERR_NOT_A_SKEW_SHAPE: i32 = 6;
pub const SCHURDET_ERR_NOT_A_BORDER_STRIP: i32 = 7;
pub const SCHURDET_ERR_NOT_CONTAINED: i32 = 8;
pub const SCHURDET_ERR_OUT_OF_RANGE: i32 = 9;
pub const SCHURDET_ERR_INCOMPATIBLE_CUTTING_STRIP: i32 = 10;
pub const SCHURDET_ERR_NOT_SQUARE: i32 = 11;
pub const SCHURDET_ERR_SIZE_GUARD: i32 = 12;
pub const SCHURDET_ERR_UNBOUND_VARIABLE: i32 = 13;
pub const SCHURDET_ERR_SINGULAR_EVALUATION: i32 = 14;
pub const SCHURDET_ERR_SHORT_PARAMETERS: i32 = 15;
pub const SCHURDET_ERR_PRECONDITION: i32 = 16;
pub const SCHURDET_ERR_GLUE_FAILURE: i32 = 17;
pub const SCHURDET_ERR_ATTACH: i32 = 18;
pub const SCHURDET_ERR_CONSTRUCTION_UNAVAILABLE: i32 = 19;
pub const SCHURDET_ERR_INPUT: i32 = 20;

pub const SCHURDET_VERDICT_PASS: i32 = 0;
pub const SCHURDET_VERDICT_FAIL: i32 = 1;
pub const SCHURDET_VERDICT_TRIVIAL: i32 = 2;
pub const SCHURDET_VERDICT_ZERO: i32 = 3;

pub const SCHURDET_STRIP_OUTER: i32 = 0;
pub const SCHURDET_STRIP_INNER: i32 = 1;

/// A skew shape `λ/μ`.
pub struct SchurdetShape(SkewShape);

/// An element of the free ring on `h_{r,s}`.
pub struct SchurdetPoly(HPoly);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

enum Failure {
    Core(Error),
    Null,
    Utf8,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> i32 {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SCHURDET_OK,
        Ok(Err(Failure::Core(e))) => {
            set_error(e.to_string());
            e.code()
        }
        Ok(Err(Failure::Null)) => {
            set_error("null pointer argument".into());
            SCHURDET_ERR_NULL
        }
        Ok(Err(Failure::Utf8)) => {
            set_error("string argument is not UTF-8".into());
            SCHURDET_ERR_UTF8
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(msg);
            SCHURDET_ERR_PANIC
        }
    }
}

unsafe fn slice<'a>(p: *const i64, len: usize) -> Result<&'a [i64], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(Failure::Null);
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Null);
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure::Utf8)
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null);
    }
    *out = CString::new(s.replace('\0', " "))
        .unwrap_or_default()
        .into_raw();
    Ok(())
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or(Failure::Null)
}

/// Message of the last failed call on this thread, or null. Owned by the library and valid
/// until the next call on the same thread.
#[no_mangle]
pub extern "C" fn schurdet_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn schurdet_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds `outer/inner` from weakly decreasing part arrays.
///
/// # Safety
/// Each array must hold at least its stated length; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schurdet_shape_new(
    outer: *const i64,
    outer_len: usize,
    inner: *const i64,
    inner_len: usize,
    out: *mut *mut SchurdetShape,
) -> i32 {
    guard(|| {
        if out.is_null() {
            return Err(Failure::Null);
        }
        let o = Partition::new(slice(outer, outer_len)?.to_vec())?;
        let i = Partition::new(slice(inner, inner_len)?.to_vec())?;
        let s = SkewShape::new(o, i)?;
        *out = Box::into_raw(Box::new(SchurdetShape(s)));
        Ok(())
    })
}

/// # Safety
/// `shape` must be null or a live handle from [`schurdet_shape_new`].
#[no_mangle]
pub unsafe extern "C" fn schurdet_shape_free(shape: *mut SchurdetShape) {
    if !shape.is_null() {
        drop(Box::from_raw(shape));
    }
}

/// Number of cells of the shape, or -1 for a null handle.
///
/// # Safety
/// `shape` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn schurdet_shape_size(shape: *const SchurdetShape) -> i64 {
    shape.as_ref().map_or(-1, |s| s.0.size())
}

/// `s̃_{λ/μ}` as an `n × n` determinant; `n = 0` means the length of `λ`.
///
/// # Safety
/// `shape` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schurdet_schur9(
    shape: *const SchurdetShape,
    n: usize,
    out: *mut *mut SchurdetPoly,
) -> i32 {
    guard(|| {
        let s = &handle(shape)?.0;
        if out.is_null() {
            return Err(Failure::Null);
        }
        let n = if n == 0 { s.outer.len() } else { n };
        let p = schur9(&s.outer, &s.inner, n)?;
        *out = Box::into_raw(Box::new(SchurdetPoly(p)));
        Ok(())
    })
}

/// # Safety
/// `poly` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn schurdet_poly_free(poly: *mut SchurdetPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Number of monomials, or -1 for a null handle.
///
/// # Safety
/// `poly` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn schurdet_poly_num_terms(poly: *const SchurdetPoly) -> i64 {
    poly.as_ref().map_or(-1, |p| p.0.num_terms() as i64)
}

/// 1 when equal, 0 when not, -1 if either handle is null.
///
/// # Safety
/// Both handles must be null or live.
#[no_mangle]
pub unsafe extern "C" fn schurdet_poly_equal(
    a: *const SchurdetPoly,
    b: *const SchurdetPoly,
) -> i32 {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => i32::from(a.0 == b.0),
        _ => -1,
    }
}

/// # Safety
/// `poly` must be a live handle; `out` must be writable. Free the result with
/// [`schurdet_string_free`].
#[no_mangle]
pub unsafe extern "C" fn schurdet_poly_to_string(
    poly: *const SchurdetPoly,
    out: *mut *mut c_char,
) -> i32 {
    guard(|| {
        let p = &handle(poly)?.0;
        write_string(out, p.to_string())
    })
}

/// The classical skew Schur function at `x_i = num[i] / den[i]`, written as `"p/q"`.
///
/// # Safety
/// `num` and `den` must hold `d` values; `shape` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schurdet_classical_value(
    shape: *const SchurdetShape,
    num: *const i64,
    den: *const i64,
    d: usize,
    out: *mut *mut c_char,
) -> i32 {
    guard(|| {
        let s = &handle(shape)?.0;
        let (n, m) = (slice(num, d)?, slice(den, d)?);
        if m.contains(&0) {
            return Err(Error::Input("zero denominator".into()).into());
        }
        let x: Vec<BigRational> = n
            .iter()
            .zip(m)
            .map(|(&a, &b)| BigRational::new(BigInt::from(a), BigInt::from(b)))
            .collect();
        write_string(out, classical_value(s, &x)?.to_string())
    })
}

/// Border strip decomposition by the outer or inner strip, as JSON `{"p":[..],"q":[..],"strips":[..]}`.
///
/// # Safety
/// `shape` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schurdet_decompose_json(
    shape: *const SchurdetShape,
    strip: i32,
    out: *mut *mut c_char,
) -> i32 {
    guard(|| {
        let s = &handle(shape)?.0;
        let d = match strip {
            SCHURDET_STRIP_OUTER => lascoux_pragacz(s)?,
            SCHURDET_STRIP_INNER => kreiman(s)?,
            other => return Err(Error::Input(format!("unknown cutting strip {other}")).into()),
        };
        write_string(
            out,
            serde_json::to_string(&d).expect("decompositions serialize"),
        )
    })
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Pass => SCHURDET_VERDICT_PASS,
        Verdict::Fail => SCHURDET_VERDICT_FAIL,
        Verdict::TrivialPass => SCHURDET_VERDICT_TRIVIAL,
        Verdict::Zero => SCHURDET_VERDICT_ZERO,
    }
}

/// Runs identity `id` (e.g. `"thm3.3"`) on a JSON instance with default options. Writes the
/// reports as JSON lines and the worst verdict (Fail over anything else).
///
/// # Safety
/// `id` and `instance` must be NUL-terminated; `out` and `verdict` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schurdet_verify_json(
    id: *const c_char,
    instance: *const c_char,
    out: *mut *mut c_char,
    verdict: *mut i32,
) -> i32 {
    guard(|| {
        if verdict.is_null() {
            return Err(Failure::Null);
        }
        let theorem: TheoremId = text(id)?.parse()?;
        let inst = parse_json(text(instance)?)?;
        let reports = run_instance(theorem, &inst, &Options::default())?;
        let worst = reports
            .iter()
            .map(|r| r.verdict)
            .find(|&v| v == Verdict::Fail)
            .or_else(|| reports.first().map(|r| r.verdict))
            .unwrap_or(Verdict::TrivialPass);
        let lines: Vec<String> = reports
            .into_iter()
            .map(|mut r| {
                r.elapsed_ms = None;
                serde_json::to_string(&r).expect("reports serialize")
            })
            .collect();
        write_string(out, lines.join("\n"))?;
        *verdict = verdict_code(worst);
        Ok(())
    })
}
