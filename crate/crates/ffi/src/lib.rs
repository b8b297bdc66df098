//! C interface to the comlie series computations.
//!
//! Every function returns a `ComlieStatus`. Series come back as opaque
//! `ComlieSeries` handles that the caller releases with
//! `comlie_series_free`. After a failure, `comlie_last_error` describes it
//! on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use comlie::poincare::{self, Family, GroupSpec, Route};
use comlie::{Error, TruncatedSeries};

pub const COMLIE_FAMILY_U: u32 = 0;
pub const COMLIE_FAMILY_SU: u32 = 1;
pub const COMLIE_FAMILY_SP: u32 = 2;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComlieStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    SizeCap = 3,
    OutOfRange = 4,
    BufferTooSmall = 5,
    Overflow = 6,
    Internal = 7,
}

/// A truncated power series in `t` with integer coefficients.
pub struct ComlieSeries {
    inner: TruncatedSeries,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn fail(status: ComlieStatus, msg: impl Into<String>) -> ComlieStatus {
    set_error(msg);
    status
}

fn status_of(e: &Error) -> ComlieStatus {
    match e {
        Error::Size { .. } => ComlieStatus::SizeCap,
        Error::InvalidArgument(_) => ComlieStatus::InvalidArgument,
        _ => ComlieStatus::Internal,
    }
}

/// Runs `f`, turning panics into `Internal`.
fn guard(f: impl FnOnce() -> ComlieStatus) -> ComlieStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(ComlieStatus::Internal, "internal panic"),
    }
}

fn family(code: u32) -> Option<Family> {
    match code {
        COMLIE_FAMILY_U => Some(Family::U),
        COMLIE_FAMILY_SU => Some(Family::SU),
        COMLIE_FAMILY_SP => Some(Family::Sp),
        _ => None,
    }
}

fn route(use_oracle: bool) -> Route {
    if use_oracle {
        Route::Oracle
    } else {
        Route::Enumeration
    }
}

fn emit(
    out: *mut *mut ComlieSeries,
    compute: impl FnOnce() -> comlie::Result<TruncatedSeries>,
) -> ComlieStatus {
    if out.is_null() {
        return fail(ComlieStatus::NullPointer, "output pointer is null");
    }
    // SAFETY: checked non-null; the caller provides a writable slot.
    unsafe { *out = ptr::null_mut() };
    match compute() {
        Ok(inner) => {
            let handle = Box::into_raw(Box::new(ComlieSeries { inner }));
            // SAFETY: as above.
            unsafe { *out = handle };
            ComlieStatus::Ok
        }
        Err(e) => fail(status_of(&e), e.to_string()),
    }
}

fn group(family_code: u32, rank: usize) -> comlie::Result<GroupSpec> {
    let f = family(family_code)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown family code {family_code}")))?;
    GroupSpec::new(f, rank)
}

/// The `E_com` Poincaré polynomial, truncated at its top degree.
///
/// # Safety
/// `out` must be null or point to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn comlie_ecom_series(
    family: u32,
    rank: usize,
    use_oracle: bool,
    out: *mut *mut ComlieSeries,
) -> ComlieStatus {
    guard(|| {
        emit(out, || {
            let g = group(family, rank)?;
            let p = poincare::ecom_numerator_via(&g, route(use_oracle))?;
            Ok(p.truncate(g.top_ecom_degree()))
        })
    })
}

/// The `B_com` Poincaré series through `t^maxdeg`.
///
/// # Safety
/// `out` must be null or point to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn comlie_bcom_series(
    family: u32,
    rank: usize,
    maxdeg: usize,
    use_oracle: bool,
    out: *mut *mut ComlieSeries,
) -> ComlieStatus {
    guard(|| {
        emit(out, || {
            let g = group(family, rank)?;
            Ok(poincare::bcom_series_via(&g, route(use_oracle))?.expand(maxdeg))
        })
    })
}

/// The stable `B_com` series of a family through `t^maxdeg`.
///
/// # Safety
/// `out` must be null or point to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn comlie_stable_series(
    family: u32,
    maxdeg: usize,
    out: *mut *mut ComlieSeries,
) -> ComlieStatus {
    guard(|| {
        emit(out, || {
            let f = self::family(family)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown family code {family}")))?;
            Ok(poincare::stable_bcom(f, maxdeg))
        })
    })
}

/// Highest degree stored in the series.
///
/// # Safety
/// `series` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn comlie_series_trunc(series: *const ComlieSeries, out: *mut usize) -> ComlieStatus {
    if series.is_null() || out.is_null() {
        return fail(ComlieStatus::NullPointer, "null argument");
    }
    *out = (*series).inner.trunc();
    ComlieStatus::Ok
}

/// Coefficient of `t^degree` as an `int64_t`.
///
/// # Safety
/// `series` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn comlie_series_coeff_i64(
    series: *const ComlieSeries,
    degree: usize,
    out: *mut i64,
) -> ComlieStatus {
    if series.is_null() || out.is_null() {
        return fail(ComlieStatus::NullPointer, "null argument");
    }
    let s = &(*series).inner;
    if degree > s.trunc() {
        return fail(ComlieStatus::OutOfRange, format!("degree {degree} exceeds t^{}", s.trunc()));
    }
    match i64::try_from(s.coeff(degree)) {
        Ok(v) => {
            *out = v;
            ComlieStatus::Ok
        }
        Err(_) => fail(ComlieStatus::Overflow, "coefficient does not fit in int64_t"),
    }
}

/// Coefficient of `t^degree` as a NUL-terminated decimal string.
///
/// `needed` receives the buffer size required, including the terminator,
/// whether or not `buf` was large enough. `buf` may be null when `len` is 0.
///
/// # Safety
/// `series` must be a live handle; `buf` must be writable for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn comlie_series_coeff_string(
    series: *const ComlieSeries,
    degree: usize,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> ComlieStatus {
    if series.is_null() || (buf.is_null() && len > 0) {
        return fail(ComlieStatus::NullPointer, "null argument");
    }
    let s = &(*series).inner;
    if degree > s.trunc() {
        return fail(ComlieStatus::OutOfRange, format!("degree {degree} exceeds t^{}", s.trunc()));
    }
    let text = s.coeff(degree).to_string();
    let size = text.len() + 1;
    if !needed.is_null() {
        *needed = size;
    }
    if len < size {
        return fail(ComlieStatus::BufferTooSmall, format!("need {size} bytes"));
    }
    ptr::copy_nonoverlapping(text.as_ptr().cast::<c_char>(), buf, text.len());
    *buf.add(text.len()) = 0;
    ComlieStatus::Ok
}

/// Releases a series handle. Null is ignored.
///
/// # Safety
/// `series` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn comlie_series_free(series: *mut ComlieSeries) {
    if !series.is_null() {
        drop(Box::from_raw(series));
    }
}

/// Message for the last failure on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn comlie_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn comlie_version() -> *const c_char {
    static VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(v) => v,
        Err(_) => panic!("version contains NUL"),
    };
    VERSION.as_ptr()
}
