//! C ABI over the ordsgp toolkit.
//!
//! Structures and catalogs are opaque heap handles released with their
//! `_free` function. Every fallible call returns an [`OrdsgpStatus`]; on
//! failure [`ordsgp_last_error`] describes the problem for the calling
//! thread. Strings handed out are NUL-terminated UTF-8 and must be released
//! with [`ordsgp_string_free`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ordsgp::enumerate::{self, GenerationConfig, OrderMode};
use ordsgp::harness::{self, TheoremId, Verdict};
use ordsgp::{Analysis, Error, OrderedSemigroup, Predicate};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrdsgpStatus {
    Ok = 0,
    /// Well-formed input that breaks an axiom.
    Invalid = 1,
    /// Input that is not a table and relation of matching shape.
    Parse = 2,
    NullPointer = 3,
    InvalidUtf8 = 4,
    UnknownName = 5,
    OutOfRange = 6,
    SizeCap = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrdsgpVerdict {
    Equivalent = 0,
    HypothesisNotMet = 1,
    Discrepancy = 2,
}

impl From<Verdict> for OrdsgpVerdict {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Equivalent => OrdsgpVerdict::Equivalent,
            Verdict::HypothesisNotMet => OrdsgpVerdict::HypothesisNotMet,
            Verdict::Discrepancy => OrdsgpVerdict::Discrepancy,
        }
    }
}

/// A validated finite ordered semigroup.
pub struct OrdsgpStructure {
    inner: OrderedSemigroup,
}

/// An enumerated list of structures.
pub struct OrdsgpCatalog {
    items: Vec<OrderedSemigroup>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(msg).expect("NULs removed")));
}

fn status_of(e: &Error) -> OrdsgpStatus {
    match e {
        Error::Invalid(_) => OrdsgpStatus::Invalid,
        Error::UnknownPredicate(_) | Error::UnknownTheorem(_) => OrdsgpStatus::UnknownName,
        Error::SizeCap { .. } => OrdsgpStatus::SizeCap,
        e if e.is_parse_error() => OrdsgpStatus::Parse,
        _ => OrdsgpStatus::Internal,
    }
}

fn fail(e: Error) -> OrdsgpStatus {
    set_error(e.to_string());
    status_of(&e)
}

fn null(what: &str) -> OrdsgpStatus {
    set_error(format!("{what} is null"));
    OrdsgpStatus::NullPointer
}

/// Runs `body`, turning a panic into [`OrdsgpStatus::Internal`].
fn guard(body: impl FnOnce() -> OrdsgpStatus) -> OrdsgpStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic");
            OrdsgpStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, OrdsgpStatus> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error(format!("{what} is not valid UTF-8"));
        OrdsgpStatus::InvalidUtf8
    })
}

unsafe fn structure<'a>(p: *const OrdsgpStructure) -> Result<&'a OrderedSemigroup, OrdsgpStatus> {
    p.as_ref().map(|s| &s.inner).ok_or_else(|| null("structure handle"))
}

unsafe fn hand_out_string(text: String, out: *mut *mut c_char) -> OrdsgpStatus {
    match CString::new(text) {
        Ok(c) => {
            *out = c.into_raw();
            OrdsgpStatus::Ok
        }
        Err(_) => {
            set_error("output contained a NUL byte");
            OrdsgpStatus::Internal
        }
    }
}

unsafe fn hand_out_structure(s: OrderedSemigroup, out: *mut *mut OrdsgpStructure) -> OrdsgpStatus {
    *out = Box::into_raw(Box::new(OrdsgpStructure { inner: s }));
    OrdsgpStatus::Ok
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

/// Message for the last failure on this thread, or NULL. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ordsgp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn ordsgp_status_name(status: OrdsgpStatus) -> *const c_char {
    let s: &'static CStr = match status {
        OrdsgpStatus::Ok => c"ok",
        OrdsgpStatus::Invalid => c"invalid",
        OrdsgpStatus::Parse => c"parse",
        OrdsgpStatus::NullPointer => c"null_pointer",
        OrdsgpStatus::InvalidUtf8 => c"invalid_utf8",
        OrdsgpStatus::UnknownName => c"unknown_name",
        OrdsgpStatus::OutOfRange => c"out_of_range",
        OrdsgpStatus::SizeCap => c"size_cap",
        OrdsgpStatus::Internal => c"internal",
    };
    s.as_ptr()
}

/// `s` must come from this library (or be NULL) and not be used again.
#[no_mangle]
pub unsafe extern "C" fn ordsgp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `{"order": n, "table": [[..]], "leq": [[..]]}` and validates it.
///
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ordsgp_structure_from_json(json: *const c_char, out: *mut *mut OrdsgpStructure) -> OrdsgpStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        let text = tri!(read_str(json, "json"));
        match OrderedSemigroup::from_json_str(text) {
            Ok(s) => hand_out_structure(s, out),
            Err(e) => fail(e),
        }
    })
}

/// Builds a structure from a row-major `n*n` product table and `n*n`
/// order matrix (nonzero means `i <= j`).
///
/// `table` and `leq` must each point to `n*n` readable values.
#[no_mangle]
pub unsafe extern "C" fn ordsgp_structure_from_arrays(
    n: usize,
    table: *const u32,
    leq: *const u8,
    out: *mut *mut OrdsgpStructure,
) -> OrdsgpStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        if table.is_null() {
            return null("table");
        }
        if leq.is_null() {
            return null("leq");
        }
        if n == 0 || n > ordsgp::structure::MAX_ORDER {
            return fail(if n == 0 { Error::Empty } else { Error::TooLarge { order: n, max: ordsgp::structure::MAX_ORDER } });
        }
        let t: Vec<usize> = std::slice::from_raw_parts(table, n * n).iter().map(|&v| v as usize).collect();
        let l: Vec<bool> = std::slice::from_raw_parts(leq, n * n).iter().map(|&v| v != 0).collect();
        match OrderedSemigroup::from_flat(n, &t, &l) {
            Ok(s) => hand_out_structure(s, out),
            Err(e) => fail(e),
        }
    })
}

/// `s` must come from this library (or be NULL) and not be used again.
#[no_mangle]
pub unsafe extern "C" fn ordsgp_structure_free(s: *mut OrdsgpStructure) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Number of elements, or 0 for NULL.
///
/// `s` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn ordsgp_structure_order(s: *const OrdsgpStructure) -> usize {
    s.as_ref().map_or(0, |s| s.inner.order())
}

/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ordsgp_structure_mul(s: *const OrdsgpStructure, a: usize, b: usize, out: *mut usize) -> OrdsgpStatus {
    let s = tri!(structure(s));
    if out.is_null() {
        return null("out");
    }
    if a >= s.order() || b >= s.order() {
        set_error(format!("element out of range 0..{}", s.order()));
        return OrdsgpStatus::OutOfRange;
    }
    *out = s.mul(a, b);
    OrdsgpStatus::Ok
}

/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ordsgp_structure_leq(s: *const OrdsgpStructure, a: usize, b: usize, out: *mut bool) -> OrdsgpStatus {
    let s = tri!(structure(s));
    if out.is_null() {
        return null("out");
    }
    if a >= s.order() || b >= s.order() {
        set_error(format!("element out of range 0..{}", s.order()));
        return OrdsgpStatus::OutOfRange;
    }
    *out = s.leq(a, b);
    OrdsgpStatus::Ok
}

/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ordsgp_structure_to_json(s: *const OrdsgpStructure, out: *mut *mut c_char) -> OrdsgpStatus {
    let s = tri!(structure(s));
    if out.is_null() {
        return null("out");
    }
    hand_out_string(s.to_json_string(), out)
}

/// Isomorphism-invariant key (orders up to 6).
///
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ordsgp_canonical_form(s: *const OrdsgpStructure, out: *mut *mut c_char) -> OrdsgpStatus {
    guard(|| {
        let s = tri!(structure(s));
        if out.is_null() {
            return null("out");
        }
        match enumerate::canonical_form(s) {
            Ok(k) => hand_out_string(k, out),
            Err(e) => fail(e),
        }
    })
}

/// Axiom report for a JSON document: status `Ok` or `Invalid` with the
/// report written to `report` either way, `Parse` for malformed input.
///
/// `json` must be NUL-terminated; `report` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ordsgp_validate_json(json: *const c_char, report: *mut *mut c_char) -> OrdsgpStatus {
    guard(|| {
        if report.is_null() {
            return null("report");
        }
        let text = tri!(read_str(json, "json"));
        let doc: ordsgp::StructureJson = match serde_json::from_str(text) {
            Ok(d) => d,
            Err(e) => return fail(Error::Parse(e.to_string())),
        };
        let r = match OrderedSemigroup::from_json(&doc) {
            Ok(_) => ordsgp::ValidationReport { ok: true, violations: Vec::new() },
            Err(Error::Invalid(r)) => r,
            Err(e) => return fail(e),
        };
        let status = if r.ok { OrdsgpStatus::Ok } else { OrdsgpStatus::Invalid };
        let written = hand_out_string(serde_json::to_string(&r).expect("report serializes"), report);
        if written != OrdsgpStatus::Ok {
            return written;
        }
        if status == OrdsgpStatus::Invalid {
            set_error(r.to_string());
        }
        status
    })
}

/// Evaluates a named predicate (`left-simple`, `right-pi-inverse`, ...).
/// `witness_json` may be NULL; otherwise it receives the full result.
///
/// `s` must be a live handle, `name` NUL-terminated, `holds` writable.
#[no_mangle]
pub unsafe extern "C" fn ordsgp_predicate(
    s: *const OrdsgpStructure,
    name: *const c_char,
    holds: *mut bool,
    witness_json: *mut *mut c_char,
) -> OrdsgpStatus {
    guard(|| {
        let s = tri!(structure(s));
        let name = tri!(read_str(name, "name"));
        if holds.is_null() {
            return null("holds");
        }
        let p: Predicate = match name.parse() {
            Ok(p) => p,
            Err(e) => return fail(e),
        };
        let r = match ordsgp::predicates::evaluate(&Analysis::new(s), p) {
            Ok(r) => r,
            Err(e) => return fail(e),
        };
        *holds = r.holds;
        if witness_json.is_null() {
            return OrdsgpStatus::Ok;
        }
        hand_out_string(serde_json::to_string(&r).expect("result serializes"), witness_json)
    })
}

/// Runs one theorem suite (`thm2`, ..., `cor-cpr`). `report_json` may be
/// NULL; otherwise it receives the full report.
///
/// `s` must be a live handle, `theorem` NUL-terminated, `verdict` writable.
#[no_mangle]
pub unsafe extern "C" fn ordsgp_verify(
    s: *const OrdsgpStructure,
    theorem: *const c_char,
    verdict: *mut OrdsgpVerdict,
    report_json: *mut *mut c_char,
) -> OrdsgpStatus {
    guard(|| {
        let s = tri!(structure(s));
        let id = tri!(read_str(theorem, "theorem"));
        if verdict.is_null() {
            return null("verdict");
        }
        let id: TheoremId = match id.parse() {
            Ok(id) => id,
            Err(e) => return fail(e),
        };
        let r = match harness::verify(s, id) {
            Ok(r) => r,
            Err(e) => return fail(e),
        };
        *verdict = r.verdict.into();
        if report_json.is_null() {
            return OrdsgpStatus::Ok;
        }
        hand_out_string(serde_json::to_string(&r).expect("report serializes"), report_json)
    })
}

/// Every ordered semigroup of the given order (up to 4), optionally
/// discrete orders only and one per isomorphism class.
///
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ordsgp_enumerate(
    order: usize,
    discrete_only: bool,
    up_to_iso: bool,
    out: *mut *mut OrdsgpCatalog,
) -> OrdsgpStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        let orders = if discrete_only { OrderMode::DiscreteOnly } else { OrderMode::AllPartialOrders };
        let config = GenerationConfig { order, up_to_iso, orders, seed: None, limit: None };
        match enumerate::enumerate_ordered_semigroups(&config) {
            Ok(items) => {
                *out = Box::into_raw(Box::new(OrdsgpCatalog { items }));
                OrdsgpStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// `c` must be a live catalog or NULL.
#[no_mangle]
pub unsafe extern "C" fn ordsgp_catalog_len(c: *const OrdsgpCatalog) -> usize {
    c.as_ref().map_or(0, |c| c.items.len())
}

/// Copies entry `index` into a new structure handle.
///
/// `c` must be a live catalog; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ordsgp_catalog_get(c: *const OrdsgpCatalog, index: usize, out: *mut *mut OrdsgpStructure) -> OrdsgpStatus {
    let Some(c) = c.as_ref() else { return null("catalog handle") };
    if out.is_null() {
        return null("out");
    }
    match c.items.get(index) {
        Some(s) => hand_out_structure(s.clone(), out),
        None => {
            set_error(format!("index {index} out of range 0..{}", c.items.len()));
            OrdsgpStatus::OutOfRange
        }
    }
}

/// `c` must come from this library (or be NULL) and not be used again.
#[no_mangle]
pub unsafe extern "C" fn ordsgp_catalog_free(c: *mut OrdsgpCatalog) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}
