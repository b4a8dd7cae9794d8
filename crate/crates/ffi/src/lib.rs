//! C interface to the `seifert` library.
//!
//! Symbols and verdicts cross the boundary as opaque handles owned by the
//! caller and released with the matching `_free` function. Every fallible
//! function returns a [`SeifertStatus`]; on failure a message is available
//! from [`seifert_last_error`] on the same thread. Strings returned through
//! `char **` out-parameters are heap allocated and must be released with
//! [`seifert_string_free`].
//!
//! A panic inside the library is caught and reported as
//! `SEIFERT_STATUS_PANIC`; it never unwinds into C.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use seifert::decider::{DEFAULT_CATALOGUE_ORDER, DEFAULT_MAX_INDEX};
use seifert::fp::{default_catalogue, fingerprint};
use seifert::invariants::invariant_report;
use seifert::{decide, hempel_partners, presentation, DecideOptions, Error, SeifertSymbol, Separator, Verdict, VerdictKind};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeifertStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Catalogue = 4,
    BoundedSymbol = 5,
    ClosedSymbol = 6,
    OrientableBase = 7,
    OrbifoldBoundary = 8,
    MixedBoundary = 9,
    CapExceeded = 10,
    InvalidCosetTable = 11,
    Diagnostic = 12,
    Panic = 13,
}

impl From<&Error> for SeifertStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Parse(_) => SeifertStatus::Parse,
            Error::Catalogue(_) => SeifertStatus::Catalogue,
            Error::BoundedSymbol => SeifertStatus::BoundedSymbol,
            Error::ClosedSymbol => SeifertStatus::ClosedSymbol,
            Error::OrientableBase => SeifertStatus::OrientableBase,
            Error::OrbifoldBoundary => SeifertStatus::OrbifoldBoundary,
            Error::MixedBoundary => SeifertStatus::MixedBoundary,
            Error::CapExceeded { .. } => SeifertStatus::CapExceeded,
            Error::InvalidCosetTable(_) => SeifertStatus::InvalidCosetTable,
            Error::Diagnostic(_) => SeifertStatus::Diagnostic,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeifertVerdictKind {
    Homeomorphic = 0,
    Hempel = 1,
    NotEquivalent = 2,
    FiniteGroup = 3,
    Equivalent = 4,
}

/// Invariant named by a `NotEquivalent` verdict; `None` for other kinds.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeifertSeparator {
    None = 0,
    BaseOrbifold = 1,
    EulerNumber = 2,
    H1 = 3,
    ClassVector = 4,
}

/// Opaque parsed symbol.
pub struct SeifertSymbolHandle {
    symbol: SeifertSymbol,
}

/// Opaque decision result.
pub struct SeifertVerdictHandle {
    verdict: Verdict,
    notes: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(SeifertStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(SeifertStatus::from(&e), e.to_string())
    }
}

fn set_last_error(message: Option<String>) {
    let c = message.map(|m| CString::new(m.replace('\0', " ")).unwrap_or_default());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

/// Runs `f`, records its failure message and converts panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> SeifertStatus {
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|payload| {
        let msg = payload
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| payload.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "unknown panic".to_string());
        Err(Failure(SeifertStatus::Panic, format!("internal panic: {msg}")))
    });
    match outcome {
        Ok(()) => {
            set_last_error(None);
            SeifertStatus::Ok
        }
        Err(Failure(status, msg)) => {
            set_last_error(Some(msg));
            status
        }
    }
}

fn null() -> Failure {
    Failure(SeifertStatus::NullPointer, "null pointer argument".to_string())
}

unsafe fn borrow<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(null)
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(SeifertStatus::InvalidUtf8, format!("input is not UTF-8: {e}")))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(SeifertStatus::Diagnostic, "interior NUL in output".to_string()))?;
    write_out(out, c.into_raw())
}

unsafe fn write_symbol(out: *mut *mut SeifertSymbolHandle, symbol: SeifertSymbol) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(Box::into_raw(Box::new(SeifertSymbolHandle { symbol })));
    Ok(())
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("library values serialize")
}

/// Message describing the most recent failure on this thread, or NULL after
/// a successful call. The pointer stays valid until the next library call on
/// the same thread.
#[no_mangle]
pub extern "C" fn seifert_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string produced by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn seifert_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `SFS[...]` text into a new handle.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn seifert_symbol_parse(text: *const c_char, out: *mut *mut SeifertSymbolHandle) -> SeifertStatus {
    guard(|| {
        let symbol: SeifertSymbol = read_str(text)?.parse().map_err(Error::from)?;
        write_symbol(out, symbol)
    })
}

/// # Safety
/// `h` must be NULL or a handle from this library that is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn seifert_symbol_free(h: *mut SeifertSymbolHandle) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn seifert_symbol_to_string(h: *const SeifertSymbolHandle, out: *mut *mut c_char) -> SeifertStatus {
    guard(|| write_string(out, borrow(h)?.symbol.to_string()))
}

/// # Safety
/// `h` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn seifert_symbol_normalize(
    h: *const SeifertSymbolHandle,
    out: *mut *mut SeifertSymbolHandle,
) -> SeifertStatus {
    guard(|| write_symbol(out, borrow(h)?.symbol.normalize()))
}

/// # Safety
/// `h` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn seifert_symbol_canonical_form(
    h: *const SeifertSymbolHandle,
    out: *mut *mut SeifertSymbolHandle,
) -> SeifertStatus {
    guard(|| write_symbol(out, borrow(h)?.symbol.canonical_form()))
}

/// True for symbols without boundary. A NULL handle yields false.
///
/// # Safety
/// `h` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn seifert_symbol_is_closed(h: *const SeifertSymbolHandle) -> bool {
    h.as_ref().is_some_and(|h| h.symbol.is_closed())
}

/// Euler number as a reduced fraction with positive denominator.
///
/// # Safety
/// `h` must be a live handle; `num` and `den` must be writable.
#[no_mangle]
pub unsafe extern "C" fn seifert_symbol_euler_number(
    h: *const SeifertSymbolHandle,
    num: *mut i64,
    den: *mut i64,
) -> SeifertStatus {
    guard(|| {
        let e = seifert::euler_number(&borrow(h)?.symbol)?;
        let narrow = |v: i128| {
            i64::try_from(v).map_err(|_| Failure(SeifertStatus::CapExceeded, "Euler number overflows int64".to_string()))
        };
        let (n, d) = (narrow(e.numer())?, narrow(e.denom())?);
        write_out(num, n)?;
        write_out(den, d)
    })
}

/// Invariant report as a JSON object.
///
/// # Safety
/// `h` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn seifert_invariants_json(h: *const SeifertSymbolHandle, out: *mut *mut c_char) -> SeifertStatus {
    guard(|| write_string(out, json(&invariant_report(&borrow(h)?.symbol))))
}

/// Canonical forms of all closed symbols sharing the profinite completion,
/// as a JSON array of strings.
///
/// # Safety
/// `h` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn seifert_partners_json(h: *const SeifertSymbolHandle, out: *mut *mut c_char) -> SeifertStatus {
    guard(|| {
        let partners: Vec<String> = hempel_partners(&borrow(h)?.symbol)?.iter().map(|s| s.to_string()).collect();
        write_string(out, json(&partners))
    })
}

/// Finite-quotient fingerprint of the fundamental group as JSON. Zero
/// arguments select the defaults (index 5, groups of order at most 24).
///
/// # Safety
/// `h` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn seifert_fingerprint_json(
    h: *const SeifertSymbolHandle,
    max_index: usize,
    max_order: usize,
    out: *mut *mut c_char,
) -> SeifertStatus {
    guard(|| {
        let symbol = &borrow(h)?.symbol;
        let (index, order) = depth(max_index, max_order);
        let f = fingerprint(&presentation(symbol), index, &default_catalogue(order))?;
        write_string(out, json(&f))
    })
}

fn depth(max_index: usize, max_order: usize) -> (usize, usize) {
    let or = |v: usize, d: usize| if v == 0 { d } else { v };
    (or(max_index, DEFAULT_MAX_INDEX), or(max_order, DEFAULT_CATALOGUE_ORDER))
}

/// Decides two closed or two bounded symbols at the default depth.
///
/// # Safety
/// `a` and `b` must be live handles and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn seifert_decide(
    a: *const SeifertSymbolHandle,
    b: *const SeifertSymbolHandle,
    out: *mut *mut SeifertVerdictHandle,
) -> SeifertStatus {
    seifert_decide_with_depth(a, b, 0, 0, out)
}

/// Like [`seifert_decide`] with an explicit fingerprint depth; zero selects
/// the default for either argument.
///
/// # Safety
/// `a` and `b` must be live handles and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn seifert_decide_with_depth(
    a: *const SeifertSymbolHandle,
    b: *const SeifertSymbolHandle,
    max_index: usize,
    max_order: usize,
    out: *mut *mut SeifertVerdictHandle,
) -> SeifertStatus {
    guard(|| {
        let (m1, m2) = (&borrow(a)?.symbol, &borrow(b)?.symbol);
        if out.is_null() {
            return Err(null());
        }
        let (index, order) = depth(max_index, max_order);
        let opts = DecideOptions { max_index: index, catalogue: Some(default_catalogue(order)) };
        let verdict = decide(m1, m2, &opts)?;
        let notes = CString::new(verdict.notes.replace('\0', " ")).unwrap_or_default();
        write_out(out, Box::into_raw(Box::new(SeifertVerdictHandle { verdict, notes })))
    })
}

/// # Safety
/// `v` must be NULL or a handle from this library that is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn seifert_verdict_free(v: *mut SeifertVerdictHandle) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// # Safety
/// `v` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn seifert_verdict_kind(v: *const SeifertVerdictHandle, out: *mut SeifertVerdictKind) -> SeifertStatus {
    guard(|| {
        let kind = match borrow(v)?.verdict.kind {
            VerdictKind::Homeomorphic => SeifertVerdictKind::Homeomorphic,
            VerdictKind::HempelEquivalent { .. } => SeifertVerdictKind::Hempel,
            VerdictKind::NotEquivalent { .. } => SeifertVerdictKind::NotEquivalent,
            VerdictKind::FiniteFundamentalGroup { .. } => SeifertVerdictKind::FiniteGroup,
            VerdictKind::Equivalent { .. } => SeifertVerdictKind::Equivalent,
        };
        write_out(out, kind)
    })
}

/// Scaling unit of a `Hempel` or `Equivalent` verdict; 0 for other kinds.
///
/// # Safety
/// `v` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn seifert_verdict_k(v: *const SeifertVerdictHandle) -> i64 {
    v.as_ref().and_then(|v| v.verdict.k()).unwrap_or(0)
}

/// # Safety
/// `v` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn seifert_verdict_separator(v: *const SeifertVerdictHandle) -> SeifertSeparator {
    match v.as_ref().and_then(|v| v.verdict.separator()) {
        None => SeifertSeparator::None,
        Some(Separator::BaseOrbifold) => SeifertSeparator::BaseOrbifold,
        Some(Separator::EulerNumber) => SeifertSeparator::EulerNumber,
        Some(Separator::H1) => SeifertSeparator::H1,
        Some(Separator::ClassVector) => SeifertSeparator::ClassVector,
    }
}

/// True when a `FiniteGroup` verdict could not separate the groups.
///
/// # Safety
/// `v` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn seifert_verdict_inconclusive(v: *const SeifertVerdictHandle) -> bool {
    v.as_ref()
        .is_some_and(|v| matches!(v.verdict.kind, VerdictKind::FiniteFundamentalGroup { inconclusive: true }))
}

/// Notes text, borrowed from the handle; NULL for a NULL handle.
///
/// # Safety
/// `v` must be NULL or a live handle; the result dies with the handle.
#[no_mangle]
pub unsafe extern "C" fn seifert_verdict_notes(v: *const SeifertVerdictHandle) -> *const c_char {
    v.as_ref().map_or(ptr::null(), |v| v.notes.as_ptr())
}

/// Verdict in the same JSON shape the command-line tool prints.
///
/// # Safety
/// `v` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn seifert_verdict_json(v: *const SeifertVerdictHandle, out: *mut *mut c_char) -> SeifertStatus {
    guard(|| write_string(out, json(&borrow(v)?.verdict)))
}
