//! C ABI over `cartan-lift`.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `*_free`. Every fallible call returns a
//! [`CliftStatus`]; on failure, [`clift_last_error`] describes the most
//! recent error on the calling thread. Strings returned through `out`
//! parameters are NUL-terminated UTF-8 and must be released with
//! [`clift_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cartan_lift::cli::center_element;
use cartan_lift::context::Context;
use cartan_lift::hc::{self, Annihilator};
use cartan_lift::json;
use cartan_lift::uea::OrderKind;
use cartan_lift::{Error, UeaElement};

/// Result codes. `CLIFT_STATUS_OK` is zero; everything else is an error.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CliftStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidRank = 4,
    UnknownLetter = 5,
    OrderMismatch = 6,
    DomainViolation = 7,
    TooLarge = 8,
    InvalidDegree = 9,
    NotCentral = 10,
    DegenerateDegree = 11,
    CertificationFailure = 12,
    InvarianceViolation = 13,
    Singular = 14,
    Uncertified = 15,
    NotNumeric = 16,
    Dimension = 17,
    Panic = 99,
}

impl From<&Error> for CliftStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::InvalidRank(_) => CliftStatus::InvalidRank,
            Error::UnknownLetter(_) => CliftStatus::UnknownLetter,
            Error::OrderMismatch(..) => CliftStatus::OrderMismatch,
            Error::DomainViolation(_) => CliftStatus::DomainViolation,
            Error::TooLarge { .. } => CliftStatus::TooLarge,
            Error::InvalidDegree(_) => CliftStatus::InvalidDegree,
            Error::NotCentral { .. } => CliftStatus::NotCentral,
            Error::DegenerateDegree(_) => CliftStatus::DegenerateDegree,
            Error::CertificationFailure { .. } => CliftStatus::CertificationFailure,
            Error::InvarianceViolation(_) => CliftStatus::InvarianceViolation,
            Error::Singular => CliftStatus::Singular,
            Error::Uncertified => CliftStatus::Uncertified,
            Error::NotNumeric => CliftStatus::NotNumeric,
            Error::Dimension { .. } => CliftStatus::Dimension,
            Error::Parse(_) => CliftStatus::Parse,
        }
    }
}

/// PBW order selector.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CliftOrder {
    /// `(n, a, n̄)`
    Pr = 0,
    /// `(n, a, k)`
    B = 1,
}

/// An algebra with its PBW orders and rewrite memo.
pub struct CliftContext {
    ctx: Context,
}

/// An element of the enveloping algebra in one PBW order.
pub struct CliftElement {
    ctx: Context,
    el: UeaElement,
}

/// A certified annihilating pair.
pub struct CliftAnnihilator {
    ctx: Context,
    ann: Annihilator,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("NUL bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(CliftStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(CliftStatus::from(&e), e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn guard(f: impl FnOnce() -> Outcome) -> CliftStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            CliftStatus::Ok
        }
        Ok(Err(Failure(code, msg))) => {
            set_error(msg);
            code
        }
        Err(_) => {
            set_error("internal panic".into());
            CliftStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(CliftStatus::NullPointer, format!("{name} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(CliftStatus::InvalidUtf8, format!("{name} is not UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, name: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure(CliftStatus::NullPointer, format!("{name} is null")))
}

fn check_out<T>(p: *mut T, name: &str) -> Outcome {
    if p.is_null() {
        Err(Failure(CliftStatus::NullPointer, format!("{name} is null")))
    } else {
        Ok(())
    }
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Outcome {
    check_out(out, "out")?;
    let c = CString::new(s).map_err(|_| Failure(CliftStatus::Parse, "string contains NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn write_handle<T>(out: *mut *mut T, v: T) -> Outcome {
    check_out(out, "out")?;
    *out = Box::into_raw(Box::new(v));
    Ok(())
}

/// Message for the last failed call on this thread, or null. Owned by the
/// library; valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn clift_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn clift_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn clift_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Creates a context for an algebra name such as `"sl3"`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn clift_context_new(name: *const c_char, out: *mut *mut CliftContext) -> CliftStatus {
    guard(|| {
        let name = str_arg(name, "name")?;
        write_handle(out, CliftContext { ctx: Context::from_name(name)? })
    })
}

/// # Safety
/// `ctx` must come from [`clift_context_new`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn clift_context_free(ctx: *mut CliftContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Rank of the algebra.
///
/// # Safety
/// `ctx` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn clift_context_rank(ctx: *const CliftContext, out: *mut usize) -> CliftStatus {
    guard(|| {
        let c = ref_arg(ctx, "ctx")?;
        check_out(out, "out")?;
        *out = c.ctx.rank();
        Ok(())
    })
}

/// Algebra descriptor as JSON.
///
/// # Safety
/// `ctx` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn clift_context_describe(ctx: *const CliftContext, out: *mut *mut c_char) -> CliftStatus {
    guard(|| {
        let c = ref_arg(ctx, "ctx")?;
        write_string(out, json::to_string(&json::algebra_to_json(&c.ctx.algebra)))
    })
}

/// Center element from a spec: `casimir`, `gelfand:<k>` or `solve:<d>`.
///
/// # Safety
/// `ctx` must be a live handle; `spec` NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn clift_element_center(
    ctx: *const CliftContext,
    spec: *const c_char,
    out: *mut *mut CliftElement,
) -> CliftStatus {
    guard(|| {
        let c = ref_arg(ctx, "ctx")?;
        let spec = str_arg(spec, "spec")?;
        let el = center_element(&c.ctx, spec)?;
        write_handle(out, CliftElement { ctx: c.ctx.clone(), el })
    })
}

/// Parses an element from its JSON form.
///
/// # Safety
/// `ctx` must be a live handle; `text` NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn clift_element_from_json(
    ctx: *const CliftContext,
    text: *const c_char,
    out: *mut *mut CliftElement,
) -> CliftStatus {
    guard(|| {
        let c = ref_arg(ctx, "ctx")?;
        let text = str_arg(text, "text")?;
        let el = json::parse_uea(&c.ctx, text)?;
        write_handle(out, CliftElement { ctx: c.ctx.clone(), el })
    })
}

/// # Safety
/// `el` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn clift_element_free(el: *mut CliftElement) {
    if !el.is_null() {
        drop(Box::from_raw(el));
    }
}

/// JSON form; byte-stable for equal elements.
///
/// # Safety
/// `el` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn clift_element_to_json(el: *const CliftElement, out: *mut *mut c_char) -> CliftStatus {
    guard(|| {
        let e = ref_arg(el, "el")?;
        write_string(out, json::to_string(&json::uea_to_json(&e.el)))
    })
}

/// Compact human-readable form such as `H²-2H+4X₊²-4X₊W`.
///
/// # Safety
/// `el` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn clift_element_pretty(el: *const CliftElement, out: *mut *mut c_char) -> CliftStatus {
    guard(|| {
        let e = ref_arg(el, "el")?;
        write_string(out, e.el.pretty())
    })
}

/// Rewrites the element in another PBW order.
///
/// # Safety
/// `el` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn clift_element_change_order(
    el: *const CliftElement,
    order: CliftOrder,
    out: *mut *mut CliftElement,
) -> CliftStatus {
    guard(|| {
        let e = ref_arg(el, "el")?;
        let kind = match order {
            CliftOrder::Pr => OrderKind::Pr,
            CliftOrder::B => OrderKind::B,
        };
        let moved = e.el.change_order(e.ctx.order(kind))?;
        write_handle(out, CliftElement { ctx: e.ctx.clone(), el: moved })
    })
}

/// Product `a · b`; both must be in the same order.
///
/// # Safety
/// `a`, `b` must be live handles; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn clift_element_multiply(
    a: *const CliftElement,
    b: *const CliftElement,
    out: *mut *mut CliftElement,
) -> CliftStatus {
    guard(|| {
        let x = ref_arg(a, "a")?;
        let y = ref_arg(b, "b")?;
        let el = x.el.multiply(&y.el)?;
        write_handle(out, CliftElement { ctx: x.ctx.clone(), el })
    })
}

/// Whether the element commutes with every basis vector.
///
/// # Safety
/// `el` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn clift_element_is_central(el: *const CliftElement, out: *mut bool) -> CliftStatus {
    guard(|| {
        let e = ref_arg(el, "el")?;
        check_out(out, "out")?;
        *out = cartan_lift::uea::verify_central(&e.ctx, &e.el)?.central;
        Ok(())
    })
}

/// Harish-Chandra image of a central element, as polynomial JSON.
///
/// # Safety
/// `el` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn clift_element_hc_image(el: *const CliftElement, out: *mut *mut c_char) -> CliftStatus {
    guard(|| {
        let e = ref_arg(el, "el")?;
        let p = hc::hc_image(&e.ctx, &e.el)?;
        write_string(out, json::to_string(&json::poly_to_json(&p)))
    })
}

/// Builds the annihilating pair; fails with `CertificationFailure` (or
/// `NotCentral`, `DegenerateDegree`) if any certificate is false.
///
/// # Safety
/// `el` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn clift_annihilator_new(el: *const CliftElement, out: *mut *mut CliftAnnihilator) -> CliftStatus {
    guard(|| {
        let e = ref_arg(el, "el")?;
        let ann = hc::construct_annihilator(&e.ctx, &e.el)?;
        write_handle(out, CliftAnnihilator { ctx: e.ctx.clone(), ann })
    })
}

/// # Safety
/// `ann` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn clift_annihilator_free(ann: *mut CliftAnnihilator) {
    if !ann.is_null() {
        drop(Box::from_raw(ann));
    }
}

/// Full JSON record: `H_part`, `J`, certificates, `P`, `pr`, `b`, source.
///
/// # Safety
/// `ann` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn clift_annihilator_to_json(ann: *const CliftAnnihilator, out: *mut *mut c_char) -> CliftStatus {
    guard(|| {
        let a = ref_arg(ann, "ann")?;
        write_string(out, json::to_string(&json::annihilator_to_json(&a.ctx, &a.ann)))
    })
}

/// `J` as an element handle in the `(n, a, k)` order.
///
/// # Safety
/// `ann` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn clift_annihilator_j(ann: *const CliftAnnihilator, out: *mut *mut CliftElement) -> CliftStatus {
    guard(|| {
        let a = ref_arg(ann, "ann")?;
        write_handle(out, CliftElement { ctx: a.ctx.clone(), el: a.ann.j.clone() })
    })
}

/// Rank-one normalized form, e.g. `H + (H²+4X₊²)/(4i r)`. Fails with
/// `DomainViolation` in higher rank.
///
/// # Safety
/// `ann` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn clift_annihilator_normalized(ann: *const CliftAnnihilator, out: *mut *mut c_char) -> CliftStatus {
    guard(|| {
        let a = ref_arg(ann, "ann")?;
        let s = a
            .ann
            .normalized_display()
            .ok_or_else(|| Failure(CliftStatus::DomainViolation, "normalized form needs rank one".into()))?;
        write_string(out, s)
    })
}
