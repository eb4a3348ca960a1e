//! C ABI over `nek`: opaque handles for GSEs, posets, classification
//! reports and state sets, status codes, and a per-thread last-error
//! message.
//!
//! Every handle returned through an out-pointer is owned by the caller and
//! released with the matching `*_free` function. Strings returned as
//! `char *` are released with [`nek_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use nek::checks::SearchCap;
use nek::format::{parse_gse, parse_poset, write_gse};
use nek::rational::format_rational;
use nek::states::{embed, synthesize_full_proper, Impossibility, StatesError, Synthesis};
use nek::{
    classify, ClassificationReport, ClassifyOptions, EventSet, Flag, InvolutivePoset, StateSet,
};

/// Status of every fallible call. On anything but `NEK_STATUS_OK` a message
/// is available from [`nek_last_error_message`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NekStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    Precondition = 4,
    Impossible = 5,
    Inconsistent = 6,
    UnknownFlag = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NekFlagValue {
    True = 0,
    False = 1,
    NotApplicable = 2,
    Inconclusive = 3,
}

pub struct NekGse {
    inner: EventSet,
}

pub struct NekPoset {
    inner: InvolutivePoset,
}

pub struct NekReport {
    inner: ClassificationReport,
}

pub struct NekStateSet {
    inner: StateSet,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

type Failure = (NekStatus, String);

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> NekStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => NekStatus::Ok,
        Ok(Err((status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("panic inside nek");
            NekStatus::Panic
        }
    }
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err((NekStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| (NekStatus::InvalidUtf8, e.to_string()))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or((NekStatus::NullPointer, "null handle".into()))
}

unsafe fn store<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err((NekStatus::NullPointer, "null out-pointer".into()));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// The message of the last failed call on this thread, or NULL. Valid
/// until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn nek_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
///
/// `s` must be NULL or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn nek_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a GSE in the text format.
///
/// # Safety
///
/// `text_in` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nek_gse_parse(
    text_in: *const c_char,
    autoclose: bool,
    out: *mut *mut NekGse,
) -> NekStatus {
    guard(|| {
        let input = text(text_in)?;
        let g = parse_gse(input, autoclose).map_err(|e| (NekStatus::ParseError, e.to_string()))?;
        store(out, NekGse { inner: g })
    })
}

/// # Safety
///
/// `gse` must be NULL or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn nek_gse_free(gse: *mut NekGse) {
    if !gse.is_null() {
        drop(Box::from_raw(gse));
    }
}

/// Number of members including 0 and 1; 0 for NULL.
///
/// # Safety
///
/// `gse` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nek_gse_member_count(gse: *const NekGse) -> usize {
    gse.as_ref().map_or(0, |g| g.inner.len())
}

/// # Safety
///
/// `gse` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nek_gse_state_count(gse: *const NekGse) -> usize {
    gse.as_ref().map_or(0, |g| g.inner.num_states())
}

/// The GSE in canonical text form, or NULL for a NULL handle.
///
/// # Safety
///
/// `gse` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nek_gse_write(gse: *const NekGse) -> *mut c_char {
    gse.as_ref()
        .map_or(ptr::null_mut(), |g| owned_string(write_gse(&g.inner)))
}

/// Classifies a GSE. `max_nodes` bounds each exhaustive search; 0 selects
/// the default.
///
/// # Safety
///
/// `gse` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nek_gse_classify(
    gse: *const NekGse,
    max_nodes: u64,
    out: *mut *mut NekReport,
) -> NekStatus {
    guard(|| {
        let g = handle(gse)?;
        let cap = if max_nodes == 0 {
            SearchCap::default()
        } else {
            SearchCap { max_nodes }
        };
        let report = classify(&g.inner, ClassifyOptions { cap });
        store(out, NekReport { inner: report })
    })
}

/// # Safety
///
/// `report` must be NULL or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn nek_report_free(report: *mut NekReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Looks up one flag by name, e.g. `"algebra"` or `"prop_U"`.
///
/// # Safety
///
/// `report` must be a live handle, `name` a NUL-terminated string and
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nek_report_flag(
    report: *const NekReport,
    name: *const c_char,
    out: *mut NekFlagValue,
) -> NekStatus {
    guard(|| {
        let r = handle(report)?;
        let name = text(name)?;
        let flag = r
            .inner
            .flag(name)
            .ok_or_else(|| (NekStatus::UnknownFlag, format!("unknown flag `{name}`")))?;
        if out.is_null() {
            return Err((NekStatus::NullPointer, "null out-pointer".into()));
        }
        *out = match flag {
            Flag::True => NekFlagValue::True,
            Flag::False(_) => NekFlagValue::False,
            Flag::NotApplicable(_) => NekFlagValue::NotApplicable,
            Flag::Inconclusive(_) => NekFlagValue::Inconclusive,
        };
        Ok(())
    })
}

/// The sorted `key=value` report, or NULL for a NULL handle.
///
/// # Safety
///
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nek_report_machine(
    report: *const NekReport,
    verbose: bool,
) -> *mut c_char {
    report
        .as_ref()
        .map_or(ptr::null_mut(), |r| owned_string(r.inner.machine(verbose)))
}

/// 0 classified, 2 consistency violation, 3 inconclusive; -1 for NULL.
///
/// # Safety
///
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nek_report_exit_code(report: *const NekReport) -> i32 {
    report.as_ref().map_or(-1, |r| r.inner.exit_code())
}

/// Parses a poset in the text format.
///
/// # Safety
///
/// `text_in` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nek_poset_parse(
    text_in: *const c_char,
    out: *mut *mut NekPoset,
) -> NekStatus {
    guard(|| {
        let input = text(text_in)?;
        let p = parse_poset(input).map_err(|e| (NekStatus::ParseError, e.to_string()))?;
        store(out, NekPoset { inner: p })
    })
}

/// # Safety
///
/// `poset` must be NULL or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn nek_poset_free(poset: *mut NekPoset) {
    if !poset.is_null() {
        drop(Box::from_raw(poset));
    }
}

/// # Safety
///
/// `poset` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nek_poset_element_count(poset: *const NekPoset) -> usize {
    poset.as_ref().map_or(0, |p| p.inner.len())
}

/// Decides whether a full and proper state set exists and builds one.
/// Returns `NEK_STATUS_IMPOSSIBLE` with the reason as the last error when
/// none exists.
///
/// # Safety
///
/// `poset` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nek_poset_synthesize_states(
    poset: *const NekPoset,
    out: *mut *mut NekStateSet,
) -> NekStatus {
    guard(|| {
        let p = &handle(poset)?.inner;
        match synthesize_full_proper(p).map_err(|e| (NekStatus::Inconsistent, e.to_string()))? {
            Synthesis::Found { states, .. } => store(out, NekStateSet { inner: states }),
            Synthesis::Impossible { reason, .. } => {
                let message = match reason {
                    Impossibility::NoFullSet { p: a, q: b } => {
                        format!("no-full-set {} {}", p.label(a), p.label(b))
                    }
                    Impossibility::NoProperSet { p: a } => format!("no-proper-set {}", p.label(a)),
                    Impossibility::NoStates => "no-states".into(),
                };
                Err((NekStatus::Impossible, message))
            }
        }
    })
}

/// # Safety
///
/// `set` must be NULL or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn nek_state_set_free(set: *mut NekStateSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// # Safety
///
/// `set` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nek_state_set_count(set: *const NekStateSet) -> usize {
    set.as_ref().map_or(0, |s| s.inner.len())
}

/// The value of state `state` at element `element` as `"n/d"`, or NULL
/// when out of range.
///
/// # Safety
///
/// `set` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nek_state_set_value(
    set: *const NekStateSet,
    state: usize,
    element: usize,
) -> *mut c_char {
    set.as_ref()
        .and_then(|s| s.inner.members.get(state))
        .and_then(|m| m.values.get(element))
        .map_or(ptr::null_mut(), |v| owned_string(format_rational(v)))
}

/// Realizes the poset as a GSE through a full and proper state set.
///
/// # Safety
///
/// `poset` and `set` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nek_poset_embed(
    poset: *const NekPoset,
    set: *const NekStateSet,
    out: *mut *mut NekGse,
) -> NekStatus {
    guard(|| {
        let p = handle(poset)?;
        let s = handle(set)?;
        if s.inner
            .members
            .iter()
            .any(|m| m.values.len() != p.inner.len())
        {
            return Err((
                NekStatus::Precondition,
                "state set belongs to a different poset".into(),
            ));
        }
        let e = embed(&p.inner, &s.inner).map_err(|e| match e {
            StatesError::Precondition(_) => (NekStatus::Precondition, e.to_string()),
            other => (NekStatus::Inconsistent, other.to_string()),
        })?;
        store(out, NekGse { inner: e.gse })
    })
}
