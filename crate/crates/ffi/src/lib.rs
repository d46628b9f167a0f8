//! C ABI over `parkvol`.
//!
//! Every function returns a [`PvStatus`]. Results come back through out
//! pointers; strings are NUL-terminated, owned by the caller and released with
//! [`pv_string_free`]. Big integers and rationals travel as decimal text
//! (`"p/q"` for non-integers). After a failure, [`pv_last_error`] describes it
//! until the next call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use parkvol::combinatorics::{beta, euler_number, AVector, DescentSet};
use parkvol::parking::{inversion_enumerator_via_parking, sum_enumerator};
use parkvol::polynomials::{format_rational, parse_rational, UniPoly};
use parkvol::polytope::{
    volume_formula, volume_integration_oracle, volume_parking_sum, volume_polynomial, VolumeJson,
    ZPolytopeSpec,
};
use parkvol::strips::verify_involution_theorem;
use parkvol::{Cap, Error};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PvStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    CapExceeded = 3,
    VerificationFailed = 4,
    Internal = 5,
}

/// A univariate polynomial with integer coefficients.
pub struct PvUniPoly(UniPoly);

/// A validated `Z_S(d)` polytope.
pub struct PvVolumeSpec(ZPolytopeSpec);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("NUL removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(PvStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::CapExceeded { .. } => PvStatus::CapExceeded,
            _ => PvStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(PvStatus::NullPointer, format!("{what} is null"))
}

fn guard<F: FnOnce() -> Result<(), Failure>>(f: F) -> PvStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PvStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            PvStatus::Internal
        }
    }
}

unsafe fn slice<'a, T>(data: *const T, len: usize, what: &str) -> Result<&'a [T], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if data.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(data, len))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|_| Failure(PvStatus::Internal, "NUL in output".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn write_handle<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

fn cap_of(cap: usize) -> Cap {
    if cap == 0 {
        Cap::DEFAULT
    } else {
        Cap(cap)
    }
}

unsafe fn avector(a: *const u32, len: usize) -> Result<AVector, Failure> {
    Ok(AVector::new(slice(a, len, "a")?.to_vec())?)
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next `pv_*` call on the same thread.
#[no_mangle]
pub extern "C" fn pv_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn pv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The Euler number `E_n` as decimal text.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pv_euler_number(n: usize, out: *mut *mut c_char) -> PvStatus {
    guard(|| write_string(out, euler_number(n).to_string()))
}

/// Number of permutations of `1..=n` with descent set `{members}`.
///
/// # Safety
/// `members` must point to `len` values (may be null when `len` is 0); `out`
/// must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pv_beta(
    n: usize,
    members: *const usize,
    len: usize,
    out: *mut *mut c_char,
) -> PvStatus {
    guard(|| {
        let set = DescentSet::new(n, slice(members, len, "members")?.iter().copied())?;
        write_string(out, beta(&set).to_string())
    })
}

/// Sum enumerator `I_a(q)` for a non-decreasing `a`. `cap` 0 selects the
/// default cap.
///
/// # Safety
/// `a` must point to `len` values; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pv_sum_enumerator_new(
    a: *const u32,
    len: usize,
    cap: usize,
    out: *mut *mut PvUniPoly,
) -> PvStatus {
    guard(|| {
        let a = avector(a, len)?;
        write_handle(out, PvUniPoly(sum_enumerator(&a, cap_of(cap))?))
    })
}

/// Inversion enumerator `I_n(q)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pv_inversion_enumerator_new(
    n: usize,
    cap: usize,
    out: *mut *mut PvUniPoly,
) -> PvStatus {
    guard(|| {
        write_handle(
            out,
            PvUniPoly(inversion_enumerator_via_parking(n, cap_of(cap))?),
        )
    })
}

/// Degree of the polynomial, or -1 for zero.
///
/// # Safety
/// `poly` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn pv_unipoly_degree(poly: *const PvUniPoly, out: *mut isize) -> PvStatus {
    guard(|| {
        let p = handle(poly, "poly")?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = p.0.degree().map_or(-1, |d| d as isize);
        Ok(())
    })
}

/// Coefficient of `q^k` as decimal text.
///
/// # Safety
/// `poly` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pv_unipoly_coeff(
    poly: *const PvUniPoly,
    k: usize,
    out: *mut *mut c_char,
) -> PvStatus {
    guard(|| write_string(out, handle(poly, "poly")?.0.coeff(k).to_string()))
}

/// Value at `q = -1`.
///
/// # Safety
/// `poly` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pv_unipoly_eval_minus_one(
    poly: *const PvUniPoly,
    out: *mut *mut c_char,
) -> PvStatus {
    guard(|| write_string(out, handle(poly, "poly")?.0.eval_at_minus_one().to_string()))
}

/// Value at a rational `q` given as `"p/q"` or an integer.
///
/// # Safety
/// `poly` must be a live handle, `q` a NUL-terminated string, `out` valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn pv_unipoly_eval(
    poly: *const PvUniPoly,
    q: *const c_char,
    out: *mut *mut c_char,
) -> PvStatus {
    guard(|| {
        let p = handle(poly, "poly")?;
        let q = parse_rational(&c_str(q, "q")?)?;
        write_string(out, format_rational(&p.0.eval(&q)))
    })
}

/// Text form, e.g. `"2 + q"`.
///
/// # Safety
/// `poly` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pv_unipoly_to_string(
    poly: *const PvUniPoly,
    out: *mut *mut c_char,
) -> PvStatus {
    guard(|| write_string(out, handle(poly, "poly")?.0.to_string()))
}

/// # Safety
/// `poly` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn pv_unipoly_free(poly: *mut PvUniPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

unsafe fn c_str(s: *const c_char, what: &str) -> Result<String, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map(str::to_owned)
        .map_err(|_| Failure(PvStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

/// Build `Z_S(d)` for `S ⊆ {2, …, n-1}` and bounds given as text (`"p/q"` or
/// integers).
///
/// # Safety
/// `members` must point to `members_len` values and `d` to `d_len` NUL-terminated
/// strings; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pv_volume_spec_new(
    n: usize,
    members: *const usize,
    members_len: usize,
    d: *const *const c_char,
    d_len: usize,
    out: *mut *mut PvVolumeSpec,
) -> PvStatus {
    guard(|| {
        let set = DescentSet::new(n, slice(members, members_len, "members")?.iter().copied())?;
        let d = slice(d, d_len, "d")?
            .iter()
            .map(|&s| Ok(parse_rational(&c_str(s, "d entry")?)?))
            .collect::<Result<Vec<_>, Failure>>()?;
        write_handle(out, PvVolumeSpec(ZPolytopeSpec::new(set, d)?))
    })
}

/// # Safety
/// `spec` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn pv_volume_spec_free(spec: *mut PvVolumeSpec) {
    if !spec.is_null() {
        drop(Box::from_raw(spec));
    }
}

/// Volume from the signed multinomial sum.
///
/// # Safety
/// `spec` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pv_volume_formula(
    spec: *const PvVolumeSpec,
    out: *mut *mut c_char,
) -> PvStatus {
    guard(|| {
        write_string(
            out,
            format_rational(&volume_formula(&handle(spec, "spec")?.0)?),
        )
    })
}

/// Volume from the parking function sum.
///
/// # Safety
/// `spec` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pv_volume_parking_sum(
    spec: *const PvVolumeSpec,
    cap: usize,
    out: *mut *mut c_char,
) -> PvStatus {
    guard(|| {
        let v = volume_parking_sum(&handle(spec, "spec")?.0, cap_of(cap))?;
        write_string(out, format_rational(&v))
    })
}

/// Volume from symbolic iterated integration.
///
/// # Safety
/// `spec` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pv_volume_integral(
    spec: *const PvVolumeSpec,
    cap: usize,
    out: *mut *mut c_char,
) -> PvStatus {
    guard(|| {
        let v = volume_integration_oracle(&handle(spec, "spec")?.0, cap_of(cap))?;
        write_string(out, format_rational(&v))
    })
}

/// `n! · Vol` as a polynomial in `d1, …, dk`, in canonical text form.
///
/// # Safety
/// `spec` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pv_volume_polynomial(
    spec: *const PvVolumeSpec,
    out: *mut *mut c_char,
) -> PvStatus {
    guard(|| {
        let p = volume_polynomial(handle(spec, "spec")?.0.set())?;
        write_string(out, p.to_string())
    })
}

/// The JSON record `{"n", "S", "d", "volume", "n_factorial_volume_polynomial"}`.
///
/// # Safety
/// `spec` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pv_volume_json(
    spec: *const PvVolumeSpec,
    out: *mut *mut c_char,
) -> PvStatus {
    guard(|| {
        let j = VolumeJson::from_spec(&handle(spec, "spec")?.0)?;
        let text =
            serde_json::to_string(&j).map_err(|e| Failure(PvStatus::Internal, e.to_string()))?;
        write_string(out, text)
    })
}

/// Run the involution checks for `a`. Returns `VerificationFailed` with the
/// first failure in [`pv_last_error`] when a check does not hold.
///
/// # Safety
/// `a` must point to `len` values.
#[no_mangle]
pub unsafe extern "C" fn pv_verify_involution(a: *const u32, len: usize, cap: usize) -> PvStatus {
    guard(|| {
        let a = avector(a, len)?;
        let cap = if cap == 0 { Cap::INVOLUTION } else { Cap(cap) };
        let report = verify_involution_theorem(&a, cap)?;
        match report.failures.first() {
            None => Ok(()),
            Some(f) => Err(Failure(
                PvStatus::VerificationFailed,
                format!("{:?}: {}", f.kind, f.detail),
            )),
        }
    })
}
