//! C ABI for the stiefel verification engine.
//!
//! Reports are opaque handles; every function returns an error code
//! (`STIEFEL_OK` on success) and never unwinds across the boundary.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use stiefel::lie::{Family, FamilySpec};
use stiefel::verify::{dim_cap_reason, verify, VerifyOptions};
use stiefel::Report;

pub const STIEFEL_OK: i32 = 0;
pub const STIEFEL_ERR_NULL_ARGUMENT: i32 = -1;
pub const STIEFEL_ERR_INVALID_SPEC: i32 = -2;
pub const STIEFEL_ERR_DIM_CAP: i32 = -3;
pub const STIEFEL_ERR_INTERNAL: i32 = -4;

/// Opaque verification report handle.
pub struct StiefelReport {
    report: Report,
}

/// Verify one spec.
///
/// `family` is one of "orth-rr", "unitary-c", "unitary-h", "symp-r",
/// "symp-c", "orth-c"; `params`/`params_len` carry the family's counts
/// (orth-rr: p,q,k,l; unitary: n1,n2,m1,m2; symplectic and orth-c: n,m).
/// On success writes a handle to `out`; free it with `stiefel_report_free`.
///
/// # Safety
/// `family` must be a valid NUL-terminated string, `params` must point to
/// `params_len` readable usize values, and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stiefel_verify(
    family: *const c_char,
    params: *const usize,
    params_len: usize,
    max_dim: u32,
    out: *mut *mut StiefelReport,
) -> i32 {
    if family.is_null() || out.is_null() || (params.is_null() && params_len > 0) {
        return STIEFEL_ERR_NULL_ARGUMENT;
    }
    *out = ptr::null_mut();
    let family = match CStr::from_ptr(family).to_str() {
        Ok(s) => s.to_owned(),
        Err(_) => return STIEFEL_ERR_INVALID_SPEC,
    };
    let params: Vec<usize> = if params_len == 0 {
        Vec::new()
    } else {
        std::slice::from_raw_parts(params, params_len).to_vec()
    };
    let result = catch_unwind(AssertUnwindSafe(move || {
        let fam = Family::from_cli_name(&family).map_err(|_| STIEFEL_ERR_INVALID_SPEC)?;
        let spec = FamilySpec::new(fam, &params).map_err(|_| STIEFEL_ERR_INVALID_SPEC)?;
        if dim_cap_reason(&spec, max_dim as usize).is_some() {
            return Err(STIEFEL_ERR_DIM_CAP);
        }
        let opts = VerifyOptions {
            max_dim: max_dim as usize,
            with_timings: false,
            skip_centralizer: false,
        };
        verify(&spec, &opts).map_err(|_| STIEFEL_ERR_INTERNAL)
    }));
    match result {
        Ok(Ok(report)) => {
            *out = Box::into_raw(Box::new(StiefelReport { report }));
            STIEFEL_OK
        }
        Ok(Err(code)) => code,
        Err(_) => STIEFEL_ERR_INTERNAL,
    }
}

/// 1 when every in-scope check passed (out-of-scope specs always pass), else 0.
///
/// # Safety
/// `report` must be a live handle from `stiefel_verify`.
#[no_mangle]
pub unsafe extern "C" fn stiefel_report_passes(report: *const StiefelReport) -> i32 {
    if report.is_null() {
        return 0;
    }
    i32::from((*report).report.passes())
}

/// 1 when the spec satisfies the theorem hypotheses, else 0.
///
/// # Safety
/// `report` must be a live handle from `stiefel_verify`.
#[no_mangle]
pub unsafe extern "C" fn stiefel_report_in_scope(report: *const StiefelReport) -> i32 {
    if report.is_null() {
        return 0;
    }
    i32::from((*report).report.in_theorem_scope)
}

/// Exact rank of Der(m); -1 on a null handle.
///
/// # Safety
/// `report` must be a live handle from `stiefel_verify`.
#[no_mangle]
pub unsafe extern "C" fn stiefel_report_der_rank(report: *const StiefelReport) -> i64 {
    if report.is_null() {
        return -1;
    }
    (*report).report.checks.der_rank as i64
}

/// Exact rank of ad(g + l) restricted to m; -1 on a null handle.
///
/// # Safety
/// `report` must be a live handle from `stiefel_verify`.
#[no_mangle]
pub unsafe extern "C" fn stiefel_report_ad_rank(report: *const StiefelReport) -> i64 {
    if report.is_null() {
        return -1;
    }
    (*report).report.checks.ad_rank as i64
}

/// dim m; -1 on a null handle.
///
/// # Safety
/// `report` must be a live handle from `stiefel_verify`.
#[no_mangle]
pub unsafe extern "C" fn stiefel_report_m_dim(report: *const StiefelReport) -> i64 {
    if report.is_null() {
        return -1;
    }
    (*report).report.dims.m as i64
}

/// 1 when a non-derivation witness triple exists, else 0.
///
/// # Safety
/// `report` must be a live handle from `stiefel_verify`.
#[no_mangle]
pub unsafe extern "C" fn stiefel_report_witness_found(report: *const StiefelReport) -> i32 {
    if report.is_null() {
        return 0;
    }
    i32::from((*report).report.checks.witness_found)
}

/// The full JSON report as a newly allocated string; free it with
/// `stiefel_string_free`. NULL on a null handle.
///
/// # Safety
/// `report` must be a live handle from `stiefel_verify`.
#[no_mangle]
pub unsafe extern "C" fn stiefel_report_json(report: *const StiefelReport) -> *mut c_char {
    if report.is_null() {
        return ptr::null_mut();
    }
    let json = (*report).report.to_json();
    CString::new(json).map_or(ptr::null_mut(), CString::into_raw)
}

/// Release a report handle. NULL is a no-op.
///
/// # Safety
/// `report` must be NULL or a handle from `stiefel_verify`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn stiefel_report_free(report: *mut StiefelReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Release a string returned by `stiefel_report_json`. NULL is a no-op.
///
/// # Safety
/// `s` must be NULL or a pointer returned by `stiefel_report_json`, not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn stiefel_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
