use std::ffi::{CStr, CString};
use std::ptr;

use schurdet_ffi::*;

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    schurdet_string_free(s);
    out
}

unsafe fn shape(outer: &[i64], inner: &[i64]) -> *mut SchurdetShape {
    let mut h = ptr::null_mut();
    assert_eq!(
        schurdet_shape_new(
            outer.as_ptr(),
            outer.len(),
            inner.as_ptr(),
            inner.len(),
            &mut h
        ),
        SCHURDET_OK
    );
    h
}

#[test]
fn shape_and_polynomial_handles() {
    unsafe {
        let s = shape(&[2, 1], &[]);
        assert_eq!(schurdet_shape_size(s), 3);
        let mut p = ptr::null_mut();
        assert_eq!(schurdet_schur9(s, 0, &mut p), SCHURDET_OK);
        assert_eq!(schurdet_poly_num_terms(p), 2);
        let mut q = ptr::null_mut();
        assert_eq!(schurdet_schur9(s, 4, &mut q), SCHURDET_OK);
        assert_eq!(schurdet_poly_equal(p, q), 1);
        let mut text = ptr::null_mut();
        assert_eq!(schurdet_poly_to_string(p, &mut text), SCHURDET_OK);
        assert_eq!(take(text), "+1*h[1,-1]*h[2,0] -1*h[3,-1]");
        schurdet_poly_free(p);
        schurdet_poly_free(q);
        schurdet_shape_free(s);
    }
}

#[test]
fn classical_values_are_exact() {
    unsafe {
        let s = shape(&[2, 1], &[]);
        let (num, den) = ([1i64, 2, 3], [1i64, 1, 1]);
        let mut out = ptr::null_mut();
        assert_eq!(
            schurdet_classical_value(s, num.as_ptr(), den.as_ptr(), 3, &mut out),
            SCHURDET_OK
        );
        assert_eq!(take(out), "60");
        let bad = [1i64, 0, 1];
        assert_eq!(
            schurdet_classical_value(s, num.as_ptr(), bad.as_ptr(), 3, &mut out),
            SCHURDET_ERR_INPUT
        );
        schurdet_shape_free(s);
    }
}

#[test]
fn errors_carry_codes_and_messages() {
    unsafe {
        let mut h = ptr::null_mut();
        let (o, i) = ([1i64], [2i64]);
        assert_eq!(
            schurdet_shape_new(o.as_ptr(), 1, i.as_ptr(), 1, &mut h),
            SCHURDET_ERR_NOT_CONTAINED
        );
        assert!(h.is_null());
        let msg = CStr::from_ptr(schurdet_last_error()).to_str().unwrap();
        assert!(!msg.is_empty());
        let bad = [1i64, 2];
        assert_eq!(
            schurdet_shape_new(bad.as_ptr(), 2, ptr::null(), 0, &mut h),
            SCHURDET_ERR_INVALID_PARTITION
        );
        assert_eq!(
            schurdet_shape_new(ptr::null(), 3, ptr::null(), 0, &mut h),
            SCHURDET_ERR_NULL
        );
        assert_eq!(schurdet_shape_size(ptr::null()), -1);
        let s = shape(&[1], &[]);
        assert_eq!(
            schurdet_shape_new(o.as_ptr(), 1, ptr::null(), 0, &mut h),
            SCHURDET_OK
        );
        assert!(schurdet_last_error().is_null());
        schurdet_shape_free(h);
        schurdet_shape_free(s);
    }
}

#[test]
fn decomposition_json() {
    unsafe {
        let s = shape(&[6, 6, 6, 3, 3], &[4, 3, 2]);
        let mut out = ptr::null_mut();
        assert_eq!(
            schurdet_decompose_json(s, SCHURDET_STRIP_OUTER, &mut out),
            SCHURDET_OK
        );
        let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["q"], serde_json::json!([5, 4, -2]));
        assert_eq!(schurdet_decompose_json(s, 7, &mut out), SCHURDET_ERR_INPUT);
        schurdet_shape_free(s);
    }
}

#[test]
fn verify_reports_verdicts() {
    unsafe {
        let id = CString::new("cor4.4").unwrap();
        let inst = CString::new(r#"{"lambda":[3,3,1],"mu":[2]}"#).unwrap();
        let (mut out, mut verdict) = (ptr::null_mut(), -1);
        assert_eq!(
            schurdet_verify_json(id.as_ptr(), inst.as_ptr(), &mut out, &mut verdict),
            SCHURDET_OK
        );
        assert_eq!(verdict, SCHURDET_VERDICT_PASS);
        let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["theorem"], "cor4.4");
        let unknown = CString::new("thm0").unwrap();
        assert_eq!(
            schurdet_verify_json(unknown.as_ptr(), inst.as_ptr(), &mut out, &mut verdict),
            SCHURDET_ERR_INPUT
        );
        let not_utf8 = [0xffu8 as std::ffi::c_char, 0];
        assert_eq!(
            schurdet_verify_json(not_utf8.as_ptr(), inst.as_ptr(), &mut out, &mut verdict),
            SCHURDET_ERR_UTF8
        );
    }
}

#[test]
fn header_lists_the_interface() {
    let h = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/schurdet.h"))
        .unwrap();
    for name in [
        "schurdet_shape_new",
        "schurdet_schur9",
        "schurdet_verify_json",
        "schurdet_last_error",
        "SCHURDET_ERR_INPUT",
    ] {
        assert!(h.contains(name), "{name} missing from header");
    }
}
