use std::ffi::{CStr, CString};
use std::ptr;

use sphereconvex_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(sc_last_error_message()) }.to_str().unwrap().to_owned()
}

fn generated(kind: &str, d: usize, p: usize) -> *mut ScPolytope {
    let kind = CString::new(kind).unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { sc_polytope_generate(kind.as_ptr(), d, p, 0, &mut h) }, ScStatus::Ok);
    h
}

fn f_vector(h: *const ScPolytope) -> Vec<usize> {
    let mut len = 0;
    assert_eq!(unsafe { sc_polytope_f_vector(h, ptr::null_mut(), 0, &mut len) }, ScStatus::BufferTooSmall);
    let mut buf = vec![0; len];
    assert_eq!(unsafe { sc_polytope_f_vector(h, buf.as_mut_ptr(), len, &mut len) }, ScStatus::Ok);
    buf
}

#[test]
fn cube_and_its_polar() {
    let cube = generated("cube", 3, 6);
    assert_eq!(f_vector(cube), vec![8, 12, 6]);
    let mut n = 0;
    assert_eq!(unsafe { sc_polytope_count_fp(cube, ScCountMode::ByFace, &mut n) }, ScStatus::Ok);
    assert_eq!(n, 52);
    let mut polar = ptr::null_mut();
    assert_eq!(unsafe { sc_polytope_polar(cube, &mut polar) }, ScStatus::Ok);
    assert_eq!(f_vector(polar), vec![6, 12, 8]);
    unsafe {
        sc_polytope_free(polar);
        sc_polytope_free(cube);
    }
}

#[test]
fn json_round_trip() {
    let h = generated("cyclic", 3, 6);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { sc_polytope_to_json(h, &mut s) }, ScStatus::Ok);
    let text = unsafe { CStr::from_ptr(s) }.to_owned();
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { sc_polytope_from_json(text.as_ptr(), &mut back) }, ScStatus::Ok);
    assert_eq!(f_vector(back), f_vector(h));
    unsafe {
        sc_string_free(s);
        sc_polytope_free(back);
        sc_polytope_free(h);
    }
}

#[test]
fn failures_set_codes_and_messages() {
    let mut h = ptr::null_mut();
    let bad = CString::new(r#"{"dim": 1, "vertices": [["1","0"], ["-1","0"]]}"#).unwrap();
    assert_eq!(unsafe { sc_polytope_from_json(bad.as_ptr(), &mut h) }, ScStatus::NotHemispherical);
    assert!(last_error().contains("not hemispherical"));
    assert!(h.is_null());

    let garbage = CString::new("{").unwrap();
    assert_eq!(unsafe { sc_polytope_from_json(garbage.as_ptr(), &mut h) }, ScStatus::Parse);

    let kind = CString::new("dodecahedron").unwrap();
    assert_eq!(unsafe { sc_polytope_generate(kind.as_ptr(), 3, 6, 0, &mut h) }, ScStatus::InvalidParameter);
    assert_eq!(unsafe { sc_polytope_from_json(ptr::null(), &mut h) }, ScStatus::NullPointer);

    let mut n = 0;
    assert_eq!(unsafe { sc_polytope_count_fp(ptr::null(), ScCountMode::ByFace, &mut n) }, ScStatus::NullPointer);
    assert_eq!(unsafe { sc_phi(0, 3, 6, &mut 0) }, ScStatus::Ok);
    assert!(last_error().is_empty());
}

#[test]
fn phi_values() {
    let mut v = 0;
    assert_eq!(unsafe { sc_phi(0, 3, 6, &mut v) }, ScStatus::Ok);
    assert_eq!(v, 8);
    assert_eq!(unsafe { sc_phi(1, 3, 6, &mut v) }, ScStatus::Ok);
    assert_eq!(v, 12);
    assert_eq!(unsafe { sc_phi(2, 3, 6, &mut v) }, ScStatus::InvalidParameter);
}

#[test]
fn free_accepts_null() {
    unsafe {
        sc_polytope_free(ptr::null_mut());
        sc_string_free(ptr::null_mut());
    }
}
