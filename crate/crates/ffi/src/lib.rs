//! C ABI for the `positroid` crate.
//!
//! Every constructor hands back an opaque handle that must be released with
//! the matching `*_free` function; every function that produces text writes
//! a heap-allocated, NUL-terminated C string that must be released with
//! [`positroid_string_free`]. Functions report a [`PositroidStatus`]; on any
//! non-`Ok` status a human-readable message is available from
//! [`positroid_last_error_message`] until the next call on the same thread.

use positroid::text::{self, TermStyle};
use positroid::{
    json, le_from_necklace, necklace_from_le, positroid_dimension, Error, GrassmannNecklace,
    LeDiagram, Strictness,
};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

/// An opaque Le diagram handle.
pub struct PositroidDiagram(LeDiagram);

/// An opaque Grassmann necklace handle.
pub struct PositroidNecklace(GrassmannNecklace);

/// Result of every fallible call in this ABI.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PositroidStatus {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// An argument was malformed (bad type parameters, labels, or text).
    InvalidArgument = 2,
    /// The input text could not be parsed.
    ParseFailed = 3,
    /// The object exists but fails validation (Le condition or necklace
    /// axioms), or the conversion input does not describe a valid object.
    ValidationFailed = 4,
    /// An invariant inside the library broke; please report a bug.
    InternalError = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> PositroidStatus {
    match e {
        Error::InvalidType { .. }
        | Error::LabelOutOfRange { .. }
        | Error::DuplicateLabel { .. }
        | Error::WrongCardinality { .. }
        | Error::TermCountMismatch { .. }
        | Error::IndexOutOfRange { .. }
        | Error::OutOfShape { .. }
        | Error::EnumerationLimit { .. } => PositroidStatus::InvalidArgument,
        Error::InvalidNecklace { .. }
        | Error::InconsistentNecklace { .. }
        | Error::NotLeDiagram { .. }
        | Error::DominanceBreach { .. } => PositroidStatus::ValidationFailed,
        Error::TermSizeBroken { .. } => PositroidStatus::InternalError,
    }
}

fn fail(status: PositroidStatus, msg: String) -> PositroidStatus {
    set_error(msg);
    status
}

fn fail_null(what: &str) -> PositroidStatus {
    fail(
        PositroidStatus::NullPointer,
        format!("{what} must not be null"),
    )
}

/// Reads a caller string; on failure records the error and returns the
/// status to propagate.
unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, PositroidStatus> {
    if p.is_null() {
        return Err(fail_null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        fail(
            PositroidStatus::InvalidArgument,
            format!("{what} is not valid UTF-8"),
        )
    })
}

/// Writes an owned string through an out-pointer.
unsafe fn write_str(s: String, out: *mut *mut c_char, what: &str) -> PositroidStatus {
    if out.is_null() {
        return fail_null(what);
    }
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            clear_error();
            PositroidStatus::Ok
        }
        Err(_) => fail(
            PositroidStatus::InternalError,
            "rendered text contained an interior NUL byte".to_string(),
        ),
    }
}

/// Returns the message for the most recent failure on this thread, or null
/// if the most recent call succeeded.
///
/// The pointer stays valid until the next ABI call on the same thread; do
/// not free it.
///
/// # Safety
/// Always safe to call; the returned pointer must not outlive the next
/// call into this library on the same thread.
#[no_mangle]
pub unsafe extern "C" fn positroid_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| match &*e.borrow() {
        Some(c) => c.as_ptr(),
        None => std::ptr::null(),
    })
}

/// Frees a string returned by any function in this ABI. Null is ignored.
///
/// # Safety
/// `s` must be a pointer previously returned through an out-parameter of
/// this library (or null), and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn positroid_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---------------------------------------------------------------------------
// Diagrams
// ---------------------------------------------------------------------------

unsafe fn diagram_out(d: LeDiagram, out: *mut *mut PositroidDiagram) -> PositroidStatus {
    if out.is_null() {
        return fail_null("out");
    }
    *out = Box::into_raw(Box::new(PositroidDiagram(d)));
    clear_error();
    PositroidStatus::Ok
}

/// Parses a Le diagram from its plain-text form (`k n rows=...` header
/// followed by one `+`/`0` line per nonempty row) into a new handle.
///
/// # Safety
/// `src` must be a NUL-terminated string; `out` must be a valid pointer.
/// On `Ok` the caller owns the handle and must release it with
/// [`positroid_diagram_free`].
#[no_mangle]
pub unsafe extern "C" fn positroid_diagram_parse(
    src: *const c_char,
    out: *mut *mut PositroidDiagram,
) -> PositroidStatus {
    let src = match read_str(src, "src") {
        Ok(s) => s,
        Err(status) => return status,
    };
    match text::parse_diagram(src) {
        Ok(d) => diagram_out(d, out),
        Err(e) => fail(PositroidStatus::ParseFailed, e.to_string()),
    }
}

/// Parses a Le diagram from its JSON form into a new handle.
///
/// # Safety
/// Same contract as [`positroid_diagram_parse`].
#[no_mangle]
pub unsafe extern "C" fn positroid_diagram_parse_json(
    src: *const c_char,
    out: *mut *mut PositroidDiagram,
) -> PositroidStatus {
    let src = match read_str(src, "src") {
        Ok(s) => s,
        Err(status) => return status,
    };
    match json::diagram_from_json(src) {
        Ok(d) => diagram_out(d, out),
        Err(e) => fail(PositroidStatus::ParseFailed, e.to_string()),
    }
}

unsafe fn with_diagram<'a>(d: *const PositroidDiagram) -> Result<&'a LeDiagram, PositroidStatus> {
    if d.is_null() {
        Err(fail_null("diagram"))
    } else {
        Ok(&(*d).0)
    }
}

/// Renders a diagram in its canonical plain-text form.
///
/// # Safety
/// `d` must be a live diagram handle; `out` receives a string the caller
/// must release with [`positroid_string_free`].
#[no_mangle]
pub unsafe extern "C" fn positroid_diagram_render(
    d: *const PositroidDiagram,
    out: *mut *mut c_char,
) -> PositroidStatus {
    match with_diagram(d) {
        Ok(diagram) => write_str(text::render_diagram(diagram), out, "out"),
        Err(status) => status,
    }
}

/// Renders a diagram as a bordered picture with the boundary walk labels.
///
/// # Safety
/// Same contract as [`positroid_diagram_render`].
#[no_mangle]
pub unsafe extern "C" fn positroid_diagram_render_ascii(
    d: *const PositroidDiagram,
    out: *mut *mut c_char,
) -> PositroidStatus {
    match with_diagram(d) {
        Ok(diagram) => write_str(text::render_diagram_ascii(diagram), out, "out"),
        Err(status) => status,
    }
}

/// Renders a diagram in its canonical JSON form.
///
/// # Safety
/// Same contract as [`positroid_diagram_render`].
#[no_mangle]
pub unsafe extern "C" fn positroid_diagram_to_json(
    d: *const PositroidDiagram,
    out: *mut *mut c_char,
) -> PositroidStatus {
    match with_diagram(d) {
        Ok(diagram) => write_str(json::diagram_to_json(diagram), out, "out"),
        Err(status) => status,
    }
}

/// Checks the Le condition. Returns `Ok` when the filling is valid and
/// `ValidationFailed` when it is not; in both cases, when `report_out` is
/// non-null it receives the rendered report text (release it with
/// [`positroid_string_free`]).
///
/// # Safety
/// `d` must be a live diagram handle; `report_out` may be null.
#[no_mangle]
pub unsafe extern "C" fn positroid_diagram_validate(
    d: *const PositroidDiagram,
    report_out: *mut *mut c_char,
) -> PositroidStatus {
    let diagram = match with_diagram(d) {
        Ok(diagram) => diagram,
        Err(status) => return status,
    };
    let report = diagram.validate();
    if !report_out.is_null() {
        let status = write_str(text::render_le_report(&report), report_out, "report_out");
        if status != PositroidStatus::Ok {
            return status;
        }
    }
    if report.is_valid() {
        clear_error();
        PositroidStatus::Ok
    } else {
        fail(
            PositroidStatus::ValidationFailed,
            text::render_le_report(&report),
        )
    }
}

/// Number of rows (the rank `k`); 0 for a null handle.
///
/// # Safety
/// `d` must be a live diagram handle or null.
#[no_mangle]
pub unsafe extern "C" fn positroid_diagram_rank(d: *const PositroidDiagram) -> u32 {
    match with_diagram(d) {
        Ok(diagram) => diagram.shape().k(),
        Err(_) => 0,
    }
}

/// Size of the ground set (`n`); 0 for a null handle.
///
/// # Safety
/// `d` must be a live diagram handle or null.
#[no_mangle]
pub unsafe extern "C" fn positroid_diagram_ground_set(d: *const PositroidDiagram) -> u32 {
    match with_diagram(d) {
        Ok(diagram) => diagram.shape().n(),
        Err(_) => 0,
    }
}

/// Dimension of the positroid cell (the number of plus squares); 0 for a
/// null handle.
///
/// # Safety
/// `d` must be a live diagram handle or null.
#[no_mangle]
pub unsafe extern "C" fn positroid_diagram_dimension(d: *const PositroidDiagram) -> u64 {
    match with_diagram(d) {
        Ok(diagram) => positroid_dimension(diagram) as u64,
        Err(_) => 0,
    }
}

/// Releases a diagram handle. Null is ignored.
///
/// # Safety
/// `d` must be a handle from this library (or null) and must not be used
/// afterwards.
#[no_mangle]
pub unsafe extern "C" fn positroid_diagram_free(d: *mut PositroidDiagram) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

// ---------------------------------------------------------------------------
// Necklaces
// ---------------------------------------------------------------------------

unsafe fn necklace_out(nk: GrassmannNecklace, out: *mut *mut PositroidNecklace) -> PositroidStatus {
    if out.is_null() {
        return fail_null("out");
    }
    *out = Box::into_raw(Box::new(PositroidNecklace(nk)));
    clear_error();
    PositroidStatus::Ok
}

unsafe fn with_necklace<'a>(
    nk: *const PositroidNecklace,
) -> Result<&'a GrassmannNecklace, PositroidStatus> {
    if nk.is_null() {
        Err(fail_null("necklace"))
    } else {
        Ok(&(*nk).0)
    }
}

/// Parses a Grassmann necklace from its plain-text form (comma-separated
/// terms, each a digit string or braced list) into a new handle.
///
/// # Safety
/// `src` must be a NUL-terminated string; `out` must be a valid pointer.
/// On `Ok` the caller owns the handle and must release it with
/// [`positroid_necklace_free`].
#[no_mangle]
pub unsafe extern "C" fn positroid_necklace_parse(
    src: *const c_char,
    out: *mut *mut PositroidNecklace,
) -> PositroidStatus {
    let src = match read_str(src, "src") {
        Ok(s) => s,
        Err(status) => return status,
    };
    match text::parse_necklace(src) {
        Ok(nk) => necklace_out(nk, out),
        Err(e) => fail(PositroidStatus::ParseFailed, e.to_string()),
    }
}

/// Parses a Grassmann necklace from its JSON form into a new handle.
///
/// # Safety
/// Same contract as [`positroid_necklace_parse`].
#[no_mangle]
pub unsafe extern "C" fn positroid_necklace_parse_json(
    src: *const c_char,
    out: *mut *mut PositroidNecklace,
) -> PositroidStatus {
    let src = match read_str(src, "src") {
        Ok(s) => s,
        Err(status) => return status,
    };
    match json::necklace_from_json(src) {
        Ok(nk) => necklace_out(nk, out),
        Err(e) => fail(PositroidStatus::ParseFailed, e.to_string()),
    }
}

/// Renders a necklace in its plain-text form. With `braces` false the
/// compact digit-string form is used where unambiguous (ground set at most
/// 9); braced terms are used otherwise.
///
/// # Safety
/// `nk` must be a live necklace handle; `out` receives a string the caller
/// must release with [`positroid_string_free`].
#[no_mangle]
pub unsafe extern "C" fn positroid_necklace_render(
    nk: *const PositroidNecklace,
    braces: bool,
    out: *mut *mut c_char,
) -> PositroidStatus {
    let style = if braces {
        TermStyle::Braces
    } else {
        TermStyle::Compact
    };
    match with_necklace(nk) {
        Ok(necklace) => write_str(text::render_necklace(necklace, style), out, "out"),
        Err(status) => status,
    }
}

/// Renders a necklace in its canonical JSON form.
///
/// # Safety
/// Same contract as [`positroid_necklace_render`].
#[no_mangle]
pub unsafe extern "C" fn positroid_necklace_to_json(
    nk: *const PositroidNecklace,
    out: *mut *mut c_char,
) -> PositroidStatus {
    match with_necklace(nk) {
        Ok(necklace) => write_str(json::necklace_to_json(necklace), out, "out"),
        Err(status) => status,
    }
}

/// Checks the necklace exchange axioms. Returns `Ok` when every cyclic
/// transition is lawful and `ValidationFailed` otherwise; when `report_out`
/// is non-null it receives the rendered report text (release it with
/// [`positroid_string_free`]). With `strict` true, an index present in its
/// own term must be exchanged for a different label.
///
/// # Safety
/// `nk` must be a live necklace handle; `report_out` may be null.
#[no_mangle]
pub unsafe extern "C" fn positroid_necklace_validate(
    nk: *const PositroidNecklace,
    strict: bool,
    report_out: *mut *mut c_char,
) -> PositroidStatus {
    let necklace = match with_necklace(nk) {
        Ok(necklace) => necklace,
        Err(status) => return status,
    };
    let strictness = if strict {
        Strictness::Strict
    } else {
        Strictness::Lenient
    };
    let report = necklace.validate(strictness);
    if !report_out.is_null() {
        let status = write_str(
            text::render_necklace_report(&report),
            report_out,
            "report_out",
        );
        if status != PositroidStatus::Ok {
            return status;
        }
    }
    if report.is_valid() {
        clear_error();
        PositroidStatus::Ok
    } else {
        fail(
            PositroidStatus::ValidationFailed,
            text::render_necklace_report(&report),
        )
    }
}

/// Number of labels in each term (the rank `k`); 0 for a null handle.
///
/// # Safety
/// `nk` must be a live necklace handle or null.
#[no_mangle]
pub unsafe extern "C" fn positroid_necklace_rank(nk: *const PositroidNecklace) -> u32 {
    match with_necklace(nk) {
        Ok(necklace) => necklace.k(),
        Err(_) => 0,
    }
}

/// Size of the ground set (`n`, also the number of terms); 0 for a null
/// handle.
///
/// # Safety
/// `nk` must be a live necklace handle or null.
#[no_mangle]
pub unsafe extern "C" fn positroid_necklace_ground_set(nk: *const PositroidNecklace) -> u32 {
    match with_necklace(nk) {
        Ok(necklace) => necklace.n(),
        Err(_) => 0,
    }
}

/// Releases a necklace handle. Null is ignored.
///
/// # Safety
/// `nk` must be a handle from this library (or null) and must not be used
/// afterwards.
#[no_mangle]
pub unsafe extern "C" fn positroid_necklace_free(nk: *mut PositroidNecklace) {
    if !nk.is_null() {
        drop(Box::from_raw(nk));
    }
}

// ---------------------------------------------------------------------------
// Conversions
// ---------------------------------------------------------------------------

/// Converts a Le diagram to its Grassmann necklace. The diagram must pass
/// validation first; an invalid filling yields `ValidationFailed`.
///
/// # Safety
/// `d` must be a live diagram handle; `out` must be a valid pointer. On
/// `Ok` the caller owns the new necklace handle.
#[no_mangle]
pub unsafe extern "C" fn positroid_diagram_to_necklace(
    d: *const PositroidDiagram,
    out: *mut *mut PositroidNecklace,
) -> PositroidStatus {
    let diagram = match with_diagram(d) {
        Ok(diagram) => diagram,
        Err(status) => return status,
    };
    let report = diagram.validate();
    if !report.is_valid() {
        return fail(
            PositroidStatus::ValidationFailed,
            text::render_le_report(&report),
        );
    }
    match necklace_from_le(diagram) {
        Ok(nk) => necklace_out(nk, out),
        Err(e) => fail(status_of(&e), e.to_string()),
    }
}

/// Converts a Grassmann necklace to its Le diagram. The necklace must
/// satisfy the exchange axioms and describe a Le-valid filling; anything
/// else yields `ValidationFailed`.
///
/// # Safety
/// `nk` must be a live necklace handle; `out` must be a valid pointer. On
/// `Ok` the caller owns the new diagram handle.
#[no_mangle]
pub unsafe extern "C" fn positroid_necklace_to_diagram(
    nk: *const PositroidNecklace,
    out: *mut *mut PositroidDiagram,
) -> PositroidStatus {
    let necklace = match with_necklace(nk) {
        Ok(necklace) => necklace,
        Err(status) => return status,
    };
    match le_from_necklace(necklace) {
        Ok(d) => diagram_out(d, out),
        Err(e) => fail(status_of(&e), e.to_string()),
    }
}
