//! C ABI for the Hurwitz divisor computations.
//!
//! Conventions:
//!
//! - Every fallible call returns an [`HdlStatus`]; `HDL_STATUS_OK` is 0.
//!   On failure [`hdl_last_error_message`] returns a description
//!   (thread-local, valid until the next failing call on that thread).
//! - Divisor classes and orbit reports are opaque handles, released with
//!   their `_free` functions.
//! - Strings returned through `char **` out-parameters are NUL-terminated,
//!   owned by the caller, and released with [`hdl_string_free`]. Rationals
//!   travel as `"p/q"` strings (or `"n"` when integral) so no precision is
//!   lost at the boundary.
//!
//! The matching header is generated by cbindgen into `include/hdl.h`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::str::FromStr;

use hdl_core::braid::{orbits_with, GeneratorSet, OrbitOptions, OrbitReport};
use hdl_core::exactcomb::{catalan_n, rational_to_string};
use hdl_core::picard::{d2_class_pipeline, d2_class_theorem, d3_class, DivisorClass};
use hdl_core::symcover::{count_covers, CycleType, Permutation};
use hdl_core::{Error, ResourceGuard};

/// Status code returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HdlStatus {
    /// Success.
    Ok = 0,
    /// A required pointer was NULL.
    NullPointer = 1,
    /// An argument violated a precondition.
    InvalidArgument = 2,
    /// A textual input failed to parse.
    ParseError = 3,
    /// An enumeration exceeded the configured resource ceiling.
    ResourceExceeded = 4,
    /// A canonical tuple construction received inconsistent parameters.
    ConstructionError = 5,
}

/// Opaque divisor class handle.
pub struct HdlDivisorClass(DivisorClass);

/// Opaque orbit report handle.
pub struct HdlOrbitReport(OrbitReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let stored = CString::new(message).unwrap_or_else(|_| CString::new("invalid error").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(stored));
}

fn status_of(err: &Error) -> HdlStatus {
    match err {
        Error::InvalidArgument(_) | Error::InvalidBranchData(_) => HdlStatus::InvalidArgument,
        Error::Parse(_) => HdlStatus::ParseError,
        Error::ResourceExceeded(_) => HdlStatus::ResourceExceeded,
        Error::Construction(_) => HdlStatus::ConstructionError,
    }
}

fn fail(err: Error) -> HdlStatus {
    let status = status_of(&err);
    set_error(err.to_string());
    status
}

fn fail_null(what: &str) -> HdlStatus {
    set_error(format!("{what} must not be NULL"));
    HdlStatus::NullPointer
}

/// # Safety
/// `out` must be valid for writes.
unsafe fn write_string(out: *mut *mut c_char, value: String) -> HdlStatus {
    match CString::new(value) {
        Ok(s) => {
            *out = s.into_raw();
            HdlStatus::Ok
        }
        Err(_) => {
            set_error("string contains an interior NUL byte".into());
            HdlStatus::InvalidArgument
        }
    }
}

/// # Safety
/// `input` must point to a NUL-terminated string.
unsafe fn read_str<'a>(input: *const c_char, what: &str) -> Result<&'a str, HdlStatus> {
    if input.is_null() {
        return Err(fail_null(what));
    }
    CStr::from_ptr(input).to_str().map_err(|_| {
        set_error(format!("{what} is not valid UTF-8"));
        HdlStatus::ParseError
    })
}

/// Message for the most recent failure on this thread, or NULL if the
/// last call succeeded. The pointer stays valid until the next failing
/// call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn hdl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(s) => s.as_ptr(),
        None => std::ptr::null(),
    })
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn hdl_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr() as *const c_char
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must have been returned through a `char **` out-parameter of this
/// library and not freed before; NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn hdl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

fn new_class(
    out: *mut *mut HdlDivisorClass,
    build: impl FnOnce() -> hdl_core::Result<DivisorClass>,
) -> HdlStatus {
    if out.is_null() {
        return fail_null("out");
    }
    match build() {
        Ok(cls) => {
            unsafe { *out = Box::into_raw(Box::new(HdlDivisorClass(cls))) };
            HdlStatus::Ok
        }
        Err(err) => fail(err),
    }
}

/// Class of the two-points-in-a-fibre divisor, from the closed
/// coefficient formulas (`k >= 1`).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hdl_d2_theorem(k: u64, out: *mut *mut HdlDivisorClass) -> HdlStatus {
    new_class(out, || d2_class_theorem(k))
}

/// The same class assembled through the pushforward pipeline (`k >= 2`).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hdl_d2_pipeline(k: u64, out: *mut *mut HdlDivisorClass) -> HdlStatus {
    new_class(out, || d2_class_pipeline(k))
}

/// Class of the triple-ramification divisor (`k >= 2`).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hdl_d3(k: u64, out: *mut *mut HdlDivisorClass) -> HdlStatus {
    new_class(out, || d3_class(k))
}

/// Parses the JSON produced by `hdl_class_to_json`.
///
/// # Safety
/// `json` must be NUL-terminated; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hdl_class_parse_json(
    json: *const c_char,
    out: *mut *mut HdlDivisorClass,
) -> HdlStatus {
    let text = match read_str(json, "json") {
        Ok(t) => t,
        Err(status) => return status,
    };
    new_class(out, || DivisorClass::from_json_str(text))
}

/// Releases a divisor class handle; NULL is ignored.
///
/// # Safety
/// `cls` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn hdl_class_free(cls: *mut HdlDivisorClass) {
    if !cls.is_null() {
        drop(Box::from_raw(cls));
    }
}

/// Genus `2k` of the moduli space the class lives on; 0 for NULL.
///
/// # Safety
/// `cls` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn hdl_class_genus(cls: *const HdlDivisorClass) -> u64 {
    match cls.as_ref() {
        Some(handle) => handle.0.genus(),
        None => 0,
    }
}

/// Coefficient of the Hodge class as a rational string.
///
/// # Safety
/// `cls` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hdl_class_lambda(
    cls: *const HdlDivisorClass,
    out: *mut *mut c_char,
) -> HdlStatus {
    let Some(handle) = cls.as_ref() else {
        return fail_null("cls");
    };
    if out.is_null() {
        return fail_null("out");
    }
    write_string(out, rational_to_string(handle.0.c_lambda()))
}

/// Coefficient of the boundary class `delta_j` as a rational string.
///
/// # Safety
/// `cls` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hdl_class_delta(
    cls: *const HdlDivisorClass,
    j: u64,
    out: *mut *mut c_char,
) -> HdlStatus {
    let Some(handle) = cls.as_ref() else {
        return fail_null("cls");
    };
    if out.is_null() {
        return fail_null("out");
    }
    match handle.0.c_delta(j) {
        Some(c) => write_string(out, rational_to_string(c)),
        None => fail(Error::InvalidArgument(format!(
            "delta index {j} out of range 0..={}",
            handle.0.k()
        ))),
    }
}

/// Stable JSON rendering of the class.
///
/// # Safety
/// `cls` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hdl_class_to_json(
    cls: *const HdlDivisorClass,
    out: *mut *mut c_char,
) -> HdlStatus {
    let Some(handle) = cls.as_ref() else {
        return fail_null("cls");
    };
    if out.is_null() {
        return fail_null("out");
    }
    write_string(out, handle.0.to_json_string())
}

/// The Catalan number `C(2k, k+1)/k` as a decimal string (`k >= 1`).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hdl_catalan(k: u64, out: *mut *mut c_char) -> HdlStatus {
    if out.is_null() {
        return fail_null("out");
    }
    match catalan_n(k) {
        Ok(n) => write_string(out, n.to_string()),
        Err(err) => fail(err),
    }
}

/// Number of degree-`d` covers with `b` simple branch points and one
/// extra point of ramification `extra` (comma list such as `"3"` or
/// `"2,2"`, padded with 1s; NULL means unramified). Honors
/// `HDL_NODE_CEILING`.
///
/// # Safety
/// `extra` must be NUL-terminated or NULL; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hdl_hurwitz_count(
    d: u32,
    b: u32,
    extra: *const c_char,
    out: *mut u64,
) -> HdlStatus {
    if out.is_null() {
        return fail_null("out");
    }
    let d = d as usize;
    let mu = if extra.is_null() {
        match CycleType::new(vec![1; d]) {
            Ok(mu) => mu,
            Err(err) => return fail(err),
        }
    } else {
        let text = match read_str(extra, "extra") {
            Ok(t) => t,
            Err(status) => return status,
        };
        let given = match CycleType::from_str(text) {
            Ok(mu) => mu,
            Err(err) => return fail(err),
        };
        let total: usize = given.parts().iter().sum();
        if total > d {
            return fail(Error::Parse(format!(
                "partition {given} exceeds the degree {d}"
            )));
        }
        let mut parts = given.parts().to_vec();
        parts.extend(std::iter::repeat_n(1, d - total));
        match CycleType::new(parts) {
            Ok(mu) => mu,
            Err(err) => return fail(err),
        }
    };
    match count_covers(d, b as usize, &mu, &ResourceGuard::from_env()) {
        Ok(count) => {
            *out = count;
            HdlStatus::Ok
        }
        Err(err) => fail(err),
    }
}

/// Runs an orbit partition for the tuple set of `(d, b, phi)` and hands
/// back a report. `phi` uses cycle notation, e.g. `"(1 2 3)"`;
/// `pure_braid` selects the generator family; `quotient` additionally
/// identifies centralizer-conjugate tuples; reports do not depend on
/// `threads`. Honors `HDL_NODE_CEILING`.
///
/// # Safety
/// `phi` must be NUL-terminated; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hdl_orbit_run(
    d: u32,
    b: u32,
    phi: *const c_char,
    pure_braid: bool,
    quotient: bool,
    threads: u32,
    out: *mut *mut HdlOrbitReport,
) -> HdlStatus {
    if out.is_null() {
        return fail_null("out");
    }
    let text = match read_str(phi, "phi") {
        Ok(t) => t,
        Err(status) => return status,
    };
    let parsed = match Permutation::parse_cycles(d as usize, text) {
        Ok(p) => p,
        Err(err) => return fail(err),
    };
    let generators = if pure_braid {
        GeneratorSet::PureBraid
    } else {
        GeneratorSet::FullBraid
    };
    let options = OrbitOptions { quotient, threads: (threads as usize).max(1) };
    match orbits_with(
        d as usize,
        b as usize,
        &parsed,
        generators,
        options,
        None,
        &ResourceGuard::from_env(),
    ) {
        Ok(report) => {
            *out = Box::into_raw(Box::new(HdlOrbitReport(report)));
            HdlStatus::Ok
        }
        Err(err) => fail(err),
    }
}

/// Number of orbits in a report; 0 for NULL.
///
/// # Safety
/// `report` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn hdl_orbit_report_orbit_count(report: *const HdlOrbitReport) -> u64 {
    match report.as_ref() {
        Some(handle) => handle.0.orbit_count,
        None => 0,
    }
}

/// Whether the report certifies a single orbit over a nonempty set;
/// false for NULL.
///
/// # Safety
/// `report` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn hdl_orbit_report_transitive(report: *const HdlOrbitReport) -> bool {
    match report.as_ref() {
        Some(handle) => handle.0.transitive,
        None => false,
    }
}

/// Stable JSON rendering of the report.
///
/// # Safety
/// `report` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hdl_orbit_report_to_json(
    report: *const HdlOrbitReport,
    out: *mut *mut c_char,
) -> HdlStatus {
    let Some(handle) = report.as_ref() else {
        return fail_null("report");
    };
    if out.is_null() {
        return fail_null("out");
    }
    write_string(out, handle.0.to_json_string())
}

/// Releases an orbit report handle; NULL is ignored.
///
/// # Safety
/// `report` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn hdl_orbit_report_free(report: *mut HdlOrbitReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}
