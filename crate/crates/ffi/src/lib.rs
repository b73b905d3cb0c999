//! C ABI over `currentalg`.
//!
//! Algebras are opaque `CaAlgebra` handles owned by the caller and released
//! with `ca_algebra_free`. Strings returned through `char **` are released
//! with `ca_string_free`. Every fallible function returns a `CaStatus`; on
//! failure the message is available from `ca_last_error` on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use currentalg::catalog;
use currentalg::cohomology::{chevalley_dims, harrison_h2, CohomologyDims};
use currentalg::current::current_algebra;
use currentalg::io::{emit_algebra, parse_algebra};
use currentalg::rigidity::{rigidity_certificate, Verdict};
use currentalg::{Algebra, Error};

/// Opaque algebra handle.
pub struct CaAlgebra(Algebra);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidParameter = 4,
    UnknownAlgebra = 5,
    DimensionMismatch = 6,
    FieldMismatch = 7,
    KindMismatch = 8,
    IdentityFailure = 9,
    UnsupportedDegree = 10,
    Singular = 11,
    NotIdempotent = 12,
    Nilalgebra = 13,
    SearchBound = 14,
    Inconsistent = 15,
    Io = 16,
    Panic = 99,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaVerdict {
    RigidByH2Zero = 0,
    Inconclusive = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CaCohomologyDims {
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_h: usize,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CaRigidity {
    pub verdict: CaVerdict,
    pub h2: CaCohomologyDims,
    pub orbit_dim: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(CaStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::DimensionMismatch { .. } => CaStatus::DimensionMismatch,
            Error::FieldMismatch { .. } => CaStatus::FieldMismatch,
            Error::KindMismatch { .. } => CaStatus::KindMismatch,
            Error::Singular => CaStatus::Singular,
            Error::IdentityFailure(_) => CaStatus::IdentityFailure,
            Error::InvalidParameter(_) => CaStatus::InvalidParameter,
            Error::UnknownAlgebra(_) => CaStatus::UnknownAlgebra,
            Error::NotIdempotent(_) => CaStatus::NotIdempotent,
            Error::Nilalgebra => CaStatus::Nilalgebra,
            Error::UnsupportedDegree(_) => CaStatus::UnsupportedDegree,
            Error::SearchBound(_) => CaStatus::SearchBound,
            Error::Inconsistent(_) => CaStatus::Inconsistent,
            Error::Parse { .. } => CaStatus::Parse,
            Error::Io(_) => CaStatus::Io,
        };
        Failure(status, e.to_string())
    }
}

fn set_last_error(msg: Option<String>) {
    let c = msg.map(|m| CString::new(m.replace('\0', " ")).expect("interior NULs removed"));
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

/// Runs `f`, recording its error message and converting panics.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> CaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error(None);
            CaStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(Some(msg));
            status
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            set_last_error(Some(format!("internal error: {msg}")));
            CaStatus::Panic
        }
    }
}

fn null() -> Failure {
    Failure(CaStatus::NullPointer, "null pointer argument".into())
}

unsafe fn algebra<'a>(p: *const CaAlgebra) -> Result<&'a Algebra, Failure> {
    p.as_ref().map(|h| &h.0).ok_or_else(null)
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p).to_str().map_err(|e| Failure(CaStatus::InvalidUtf8, e.to_string()))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

unsafe fn write_handle(out: *mut *mut CaAlgebra, a: Algebra) -> Result<(), Failure> {
    write(out, Box::into_raw(Box::new(CaAlgebra(a))))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|e| Failure(CaStatus::InvalidUtf8, e.to_string()))?;
    write(out, c.into_raw())
}

fn dims(d: CohomologyDims) -> CaCohomologyDims {
    CaCohomologyDims { dim_z: d.dim_z, dim_b: d.dim_b, dim_h: d.dim_h }
}

/// Message of the last failed call on this thread, or NULL after a
/// successful call. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn ca_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses an algebra file (JSON text).
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ca_algebra_from_json(json: *const c_char, out: *mut *mut CaAlgebra) -> CaStatus {
    guard(|| write_handle(out, parse_algebra(text(json)?)?))
}

/// Builds a catalog algebra from `name` or `name(p1,p2,...)`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ca_algebra_from_catalog(spec: *const c_char, out: *mut *mut CaAlgebra) -> CaStatus {
    guard(|| write_handle(out, catalog::make_from_spec(text(spec)?)?))
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `alg` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ca_algebra_free(alg: *mut CaAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ca_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `alg` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ca_algebra_dim(alg: *const CaAlgebra, out: *mut usize) -> CaStatus {
    guard(|| write(out, algebra(alg)?.dim()))
}

/// Canonical algebra file text.
///
/// # Safety
/// `alg` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ca_algebra_to_json(alg: *const CaAlgebra, out: *mut *mut c_char) -> CaStatus {
    guard(|| write_string(out, emit_algebra(algebra(alg)?)))
}

/// Jacobi (Lie) or associativity (commutative) check on basis triples.
///
/// # Safety
/// `alg` must be a live handle; `pass` and `violations` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ca_algebra_check_identities(
    alg: *const CaAlgebra,
    pass: *mut bool,
    violations: *mut usize,
) -> CaStatus {
    guard(|| {
        let rep = algebra(alg)?.check_identities();
        write(pass, rep.pass)?;
        write(violations, rep.violations.len())
    })
}

/// `g ⊗ A`.
///
/// # Safety
/// `g` and `a` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ca_current_algebra(
    g: *const CaAlgebra,
    a: *const CaAlgebra,
    out: *mut *mut CaAlgebra,
) -> CaStatus {
    guard(|| write_handle(out, current_algebra(algebra(g)?, algebra(a)?)?))
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ca_direct_sum(a: *const CaAlgebra, b: *const CaAlgebra, out: *mut *mut CaAlgebra) -> CaStatus {
    guard(|| write_handle(out, algebra(a)?.direct_sum(algebra(b)?)?))
}

/// Chevalley–Eilenberg cohomology dimensions with adjoint coefficients,
/// degree 0, 1 or 2.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ca_chevalley_dims(g: *const CaAlgebra, degree: usize, out: *mut CaCohomologyDims) -> CaStatus {
    guard(|| write(out, dims(chevalley_dims(algebra(g)?, degree)?)))
}

/// Harrison `H²` of a commutative associative algebra.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ca_harrison_h2(a: *const CaAlgebra, out: *mut CaCohomologyDims) -> CaStatus {
    guard(|| write(out, dims(harrison_h2(algebra(a)?)?)))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ca_rigidity_certificate(g: *const CaAlgebra, out: *mut CaRigidity) -> CaStatus {
    guard(|| {
        let c = rigidity_certificate(algebra(g)?)?;
        let verdict = match c.verdict {
            Verdict::RigidByH2Zero => CaVerdict::RigidByH2Zero,
            Verdict::Inconclusive => CaVerdict::Inconclusive,
        };
        write(out, CaRigidity { verdict, h2: dims(c.h2_dims), orbit_dim: c.orbit_dim })
    })
}

/// Basis-independent invariants as a JSON object.
///
/// # Safety
/// `alg` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ca_fingerprint_json(alg: *const CaAlgebra, out: *mut *mut c_char) -> CaStatus {
    guard(|| {
        let fp = catalog::fingerprint(algebra(alg)?)?;
        write_string(out, serde_json::to_string(&fp).expect("fingerprints serialize"))
    })
}
