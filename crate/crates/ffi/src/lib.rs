//! C ABI over `sphereconvex`.
//!
//! Polytopes cross the boundary as opaque `ScPolytope` handles. Every call
//! returns an `ScStatus`; on failure `sc_last_error_message` describes the
//! error for the calling thread. Strings handed out must be released with
//! `sc_string_free`, handles with `sc_polytope_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sphereconvex::bounds::phi;
use sphereconvex::io::PolytopeFile;
use sphereconvex::polytope::{generate, Kind, SphericalPolytope};
use sphereconvex::separation::{count_face_partition_pairs, CountMode};
use sphereconvex::Error;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidParameter = 4,
    DimensionMismatch = 5,
    NotHemispherical = 6,
    NotFullDimensional = 7,
    NotSimple = 8,
    CeilingExceeded = 9,
    BufferTooSmall = 10,
    Overflow = 11,
    Geometry = 12,
    Panic = 13,
}

/// Counting semantics for `sc_polytope_count_fp`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScCountMode {
    ByFace = 0,
    ByPartition = 1,
}

/// Opaque polytope handle.
pub struct ScPolytope(SphericalPolytope);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Fail(ScStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        let status = match e {
            Error::Parse(_) | Error::Json(_) => ScStatus::Parse,
            Error::InvalidParameter(_) => ScStatus::InvalidParameter,
            Error::DimensionMismatch { .. } => ScStatus::DimensionMismatch,
            Error::NonHemispherical { .. } => ScStatus::NotHemispherical,
            Error::NotFullDimensional { .. } => ScStatus::NotFullDimensional,
            Error::NotSimple => ScStatus::NotSimple,
            Error::CeilingExceeded { .. } => ScStatus::CeilingExceeded,
            _ => ScStatus::Geometry,
        };
        Fail(status, e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(ScStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> ScStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            ScStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            ScStatus::Panic
        }
    }
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Fail(ScStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a>(p: *const ScPolytope) -> Result<&'a SphericalPolytope, Fail> {
    p.as_ref().map(|h| &h.0).ok_or_else(|| null("polytope"))
}

unsafe fn give(out: *mut *mut ScPolytope, p: SphericalPolytope) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(ScPolytope(p)));
    Ok(())
}

/// Parses a polytope file (`{"dim", "vertices", "facet_normals"?}`).
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_polytope_from_json(json: *const c_char, out: *mut *mut ScPolytope) -> ScStatus {
    guard(|| {
        let p = PolytopeFile::parse(text(json, "json")?)?.to_polytope()?;
        give(out, p)
    })
}

/// Generates an instance; `kind` is one of `simplex`, `cube`, `cyclic`,
/// `stacked`, `random_simplicial_dual`, `random_points`.
///
/// # Safety
/// `kind` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_polytope_generate(
    kind: *const c_char,
    d: usize,
    p: usize,
    seed: u64,
    out: *mut *mut ScPolytope,
) -> ScStatus {
    guard(|| {
        let kind: Kind = text(kind, "kind")?.parse()?;
        give(out, generate(kind, d, p, seed)?)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `p` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sc_polytope_free(p: *mut ScPolytope) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// The polar polytope as a new handle.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_polytope_polar(p: *const ScPolytope, out: *mut *mut ScPolytope) -> ScStatus {
    guard(|| give(out, handle(p)?.polar_polytope()?))
}

/// Writes the f-vector `(f_0, ..., f_{d-1})` into `buf`. `*len` receives the
/// length; if `cap` is smaller nothing is written and the status is
/// `BUFFER_TOO_SMALL`. `buf` may be null when `cap` is 0.
///
/// # Safety
/// `buf` must hold `cap` entries; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_polytope_f_vector(
    p: *const ScPolytope,
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
) -> ScStatus {
    guard(|| {
        let f = handle(p)?.f_vector();
        if len.is_null() {
            return Err(null("len"));
        }
        *len = f.len();
        if cap < f.len() {
            return Err(Fail(ScStatus::BufferTooSmall, format!("need {} entries, have {cap}", f.len())));
        }
        if buf.is_null() {
            return Err(null("buf"));
        }
        ptr::copy_nonoverlapping(f.as_ptr(), buf, f.len());
        Ok(())
    })
}

/// Face-partition-pair count.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_polytope_count_fp(p: *const ScPolytope, mode: ScCountMode, out: *mut usize) -> ScStatus {
    guard(|| {
        let mode = match mode {
            ScCountMode::ByFace => CountMode::ByFace,
            ScCountMode::ByPartition => CountMode::ByPartition,
        };
        let n = count_face_partition_pairs(handle(p)?, mode)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = n;
        Ok(())
    })
}

/// Serializes to a polytope file. Free the result with `sc_string_free`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_polytope_to_json(p: *const ScPolytope, out: *mut *mut c_char) -> ScStatus {
    guard(|| {
        let s = PolytopeFile::from_polytope(handle(p)?).to_json();
        if out.is_null() {
            return Err(null("out"));
        }
        *out = CString::new(s).expect("json has no nul bytes").into_raw();
        Ok(())
    })
}

/// Releases a string from `sc_polytope_to_json`. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The lower-bound function `phi_j(d, p)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_phi(j: usize, d: usize, p: usize, out: *mut i64) -> ScStatus {
    guard(|| {
        let v = phi(j, d, p)?;
        let v = i64::try_from(v).map_err(|_| Fail(ScStatus::Overflow, format!("phi = {v} does not fit in 64 bits")))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = v;
        Ok(())
    })
}

/// Message for the last failed call on this thread, empty after a success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn sc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
