//! C ABI for the tropcell library.
//!
//! Conventions, mirrored in the generated `include/tropcell.h`:
//!
//! - Objects live behind opaque handles; release them with the matching
//!   `*_free` function. A null handle is accepted everywhere and treated as
//!   an empty object by the query functions.
//! - Fallible functions return a `TropStatus` and deliver their result
//!   through an out parameter, which is written only on success.
//! - Returned strings are NUL-terminated UTF-8 owned by the caller; release
//!   them with `trop_string_free()`.
//! - After a failing call, `trop_last_error_message()` describes the
//!   problem. The message buffer is thread-local and stays valid until the
//!   next failing call on the same thread.
//! - Panics never unwind across the boundary; they surface as the internal
//!   error status.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use tropcell::complex::{bounded_subcomplex, enumerate_cells, TropicalComplex};
use tropcell::doc::{parse_document, render_document, ArrangementDocument, Metadata};
use tropcell::mixed::MixedSubdivision;
use tropcell::pipeline::{generate_random_generic, verify_all};
use tropcell::render::{render_arrangement_svg, render_mixed_svg};
use tropcell::report::{betti_report, cells_report, fvector_report, ideals_report, mixed_report};
use tropcell::{Error, FailureClass};

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TropStatus {
    /// The call succeeded.
    Ok = 0,
    /// A computed object violated an invariant it was required to satisfy.
    InvariantViolation = 1,
    /// The input was malformed, out of range, or outside the supported scope.
    InvalidInput = 2,
    /// An enumeration exceeded a configured size budget.
    ResourceLimit = 3,
    /// A required pointer argument was null.
    NullArgument = 4,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 5,
    /// The library failed internally; this indicates a bug in the library.
    Internal = 6,
}

/// Selects which plain-text report `trop_complex_report()` produces.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TropReport {
    /// Every cell with dimension, boundedness, coarse and fine type.
    Cells = 0,
    /// The cells of the bounded subcomplex.
    Bounded = 1,
    /// The type and cotype ideals, fine and coarse.
    Ideals = 2,
    /// Betti tables of the four minimal resolutions.
    Betti = 3,
    /// Face counts next to the generic prediction.
    Fvector = 4,
    /// The dual mixed subdivision of the dilated simplex.
    Mixed = 5,
}

/// An arrangement document together with the cell decomposition it induces.
/// Opaque; create with one of the `trop_complex_from_*` functions and
/// release with `trop_complex_free()`.
pub struct TropComplexHandle {
    doc: ArrangementDocument,
    tc: TropicalComplex,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn fail(e: &Error) -> TropStatus {
    set_last_error(&e.to_string());
    match e.class() {
        FailureClass::InvariantViolation => TropStatus::InvariantViolation,
        FailureClass::InvalidInput => TropStatus::InvalidInput,
        FailureClass::ResourceLimit => TropStatus::ResourceLimit,
    }
}

fn null_argument(name: &str) -> TropStatus {
    set_last_error(&format!("required argument `{name}` is null"));
    TropStatus::NullArgument
}

/// Runs the body with a panic guard so no unwind crosses the ABI.
fn guarded(f: impl FnOnce() -> TropStatus) -> TropStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_last_error("internal panic");
            TropStatus::Internal
        }
    }
}

/// # Safety
/// `text` must be null or point to a NUL-terminated string.
unsafe fn str_arg<'a>(text: *const c_char, name: &str) -> Result<&'a str, TropStatus> {
    if text.is_null() {
        return Err(null_argument(name));
    }
    unsafe { CStr::from_ptr(text) }.to_str().map_err(|_| {
        set_last_error(&format!("argument `{name}` is not valid UTF-8"));
        TropStatus::InvalidUtf8
    })
}

/// # Safety
/// `out` must be null or valid for a single pointer write.
unsafe fn write_string(s: String, out: *mut *mut c_char) -> TropStatus {
    if out.is_null() {
        return null_argument("out");
    }
    match CString::new(s) {
        Ok(c) => {
            unsafe { out.write(c.into_raw()) };
            TropStatus::Ok
        }
        Err(_) => {
            set_last_error("rendered text contains an interior NUL byte");
            TropStatus::Internal
        }
    }
}

/// # Safety
/// `h` must be null or a live handle from this library.
unsafe fn handle_ref<'a>(h: *const TropComplexHandle) -> Option<&'a TropComplexHandle> {
    unsafe { h.as_ref() }
}

fn build_handle(doc: ArrangementDocument) -> Result<TropComplexHandle, Error> {
    let arr = doc.to_arrangement()?;
    let tc = enumerate_cells(&arr)?;
    Ok(TropComplexHandle { doc, tc })
}

unsafe fn deliver_handle(
    built: Result<TropComplexHandle, Error>,
    out: *mut *mut TropComplexHandle,
) -> TropStatus {
    if out.is_null() {
        return null_argument("out");
    }
    match built {
        Ok(handle) => {
            unsafe { out.write(Box::into_raw(Box::new(handle))) };
            TropStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Parses a JSON arrangement document, enumerates the cell decomposition it
/// induces, and returns a handle to both through `out`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn trop_complex_from_document(
    text: *const c_char,
    out: *mut *mut TropComplexHandle,
) -> TropStatus {
    guarded(|| {
        let text = match unsafe { str_arg(text, "text") } {
            Ok(t) => t,
            Err(status) => return status,
        };
        let built = parse_document(text).and_then(build_handle);
        unsafe { deliver_handle(built, out) }
    })
}

/// Builds the decomposition induced by `n` hyperplanes with integer
/// coefficient rows, given row-major as `n * d` values.
///
/// # Safety
/// `coords` must point to `n * d` readable values (it may be null only when
/// `n * d == 0`) and `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn trop_complex_from_rows(
    coords: *const i64,
    n: usize,
    d: usize,
    out: *mut *mut TropComplexHandle,
) -> TropStatus {
    guarded(|| {
        let Some(total) = n.checked_mul(d) else {
            set_last_error("n * d overflows the address space");
            return TropStatus::InvalidInput;
        };
        if coords.is_null() && total > 0 {
            return null_argument("coords");
        }
        let flat: &[i64] = if total == 0 {
            &[]
        } else {
            unsafe { std::slice::from_raw_parts(coords, total) }
        };
        let rows: Vec<Vec<i64>> = flat.chunks(d.max(1)).map(<[i64]>::to_vec).collect();
        let built = build_handle(ArrangementDocument::from_integer_rows(
            &rows,
            Metadata::default(),
        ));
        unsafe { deliver_handle(built, out) }
    })
}

/// Generates a random generic arrangement of `n` hyperplanes in `d`
/// coordinates from a deterministic seed and returns its decomposition.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn trop_complex_generate(
    n: usize,
    d: usize,
    seed: u64,
    out: *mut *mut TropComplexHandle,
) -> TropStatus {
    guarded(|| {
        let built = generate_random_generic(n, d, seed).and_then(build_handle);
        unsafe { deliver_handle(built, out) }
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `h` must be null or a handle not yet freed, and must not be used after.
#[no_mangle]
pub unsafe extern "C" fn trop_complex_free(h: *mut TropComplexHandle) {
    if !h.is_null() {
        drop(unsafe { Box::from_raw(h) });
    }
}

/// Number of hyperplanes, or 0 for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn trop_complex_n(h: *const TropComplexHandle) -> usize {
    unsafe { handle_ref(h) }.map_or(0, |h| h.tc.arrangement().n())
}

/// Ambient coordinate count (the torus has dimension d - 1), or 0 for null.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn trop_complex_d(h: *const TropComplexHandle) -> usize {
    unsafe { handle_ref(h) }.map_or(0, |h| h.tc.arrangement().d())
}

/// Dimension of the decomposition, or -1 for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn trop_complex_dim(h: *const TropComplexHandle) -> i64 {
    unsafe { handle_ref(h) }.map_or(-1, |h| h.tc.dim() as i64)
}

/// Total number of cells across all dimensions, or 0 for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn trop_complex_cell_count(h: *const TropComplexHandle) -> usize {
    unsafe { handle_ref(h) }.map_or(0, |h| h.tc.cells().len())
}

/// Euler characteristic of the decomposition, or 0 for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn trop_complex_euler_characteristic(h: *const TropComplexHandle) -> i64 {
    unsafe { handle_ref(h) }.map_or(0, |h| h.tc.euler_characteristic())
}

/// Face counts by dimension. Returns the required length (`dim + 1`) and
/// copies the first `min(len, dim + 1)` entries into `buf` when it is
/// non-null. Returns 0 for a null handle.
///
/// # Safety
/// `buf` must be null or valid for `len` writes; `h` null or live.
#[no_mangle]
pub unsafe extern "C" fn trop_complex_f_vector(
    h: *const TropComplexHandle,
    buf: *mut usize,
    len: usize,
) -> usize {
    let Some(h) = (unsafe { handle_ref(h) }) else {
        return 0;
    };
    let f = h.tc.f_vector();
    if !buf.is_null() {
        let take = f.len().min(len);
        for (k, &count) in f.iter().take(take).enumerate() {
            unsafe { buf.add(k).write(count) };
        }
    }
    f.len()
}

/// Dimension of cell `idx`, or -1 when the handle is null or `idx` is out
/// of range. Cells are indexed 0 .. cell_count in a deterministic order.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn trop_cell_dim(h: *const TropComplexHandle, idx: usize) -> i64 {
    unsafe { handle_ref(h) }
        .and_then(|h| h.tc.cells().get(idx))
        .map_or(-1, |cell| cell.dim as i64)
}

/// 1 when cell `idx` is bounded, 0 when unbounded, -1 when the handle is
/// null or `idx` is out of range.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn trop_cell_is_bounded(h: *const TropComplexHandle, idx: usize) -> i32 {
    unsafe { handle_ref(h) }
        .and_then(|h| h.tc.cells().get(idx))
        .map_or(-1, |cell| i32::from(cell.bounded))
}

/// Coarse type of cell `idx`: entry j counts the hyperplanes whose sector j
/// contains the cell. Returns the required length `d` and copies the first
/// `min(len, d)` entries into `buf` when non-null; 0 when the handle is
/// null or `idx` is out of range.
///
/// # Safety
/// `buf` must be null or valid for `len` writes; `h` null or live.
#[no_mangle]
pub unsafe extern "C" fn trop_cell_coarse_type(
    h: *const TropComplexHandle,
    idx: usize,
    buf: *mut u32,
    len: usize,
) -> usize {
    let Some(cell) = (unsafe { handle_ref(h) }).and_then(|h| h.tc.cells().get(idx)) else {
        return 0;
    };
    let counts = cell.coarse.counts();
    if !buf.is_null() {
        let take = counts.len().min(len);
        for (j, &c) in counts.iter().take(take).enumerate() {
            unsafe { buf.add(j).write(c) };
        }
    }
    counts.len()
}

/// The document the handle was built from, rendered as pretty-printed JSON.
///
/// # Safety
/// `h` must be null or a live handle; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn trop_complex_document_text(
    h: *const TropComplexHandle,
    out: *mut *mut c_char,
) -> TropStatus {
    guarded(|| {
        let Some(h) = (unsafe { handle_ref(h) }) else {
            return null_argument("h");
        };
        unsafe { write_string(render_document(&h.doc), out) }
    })
}

/// Renders one of the plain-text reports into a caller-owned string.
///
/// # Safety
/// `h` must be null or a live handle; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn trop_complex_report(
    h: *const TropComplexHandle,
    kind: TropReport,
    out: *mut *mut c_char,
) -> TropStatus {
    guarded(|| {
        let Some(h) = (unsafe { handle_ref(h) }) else {
            return null_argument("h");
        };
        let rendered = match kind {
            TropReport::Cells => Ok(cells_report(&h.tc)),
            TropReport::Bounded => Ok(cells_report(&bounded_subcomplex(&h.tc))),
            TropReport::Ideals => ideals_report(&h.tc),
            TropReport::Betti => betti_report(&h.tc),
            TropReport::Fvector => Ok(fvector_report(&h.tc)),
            TropReport::Mixed => mixed_report(&h.tc),
        };
        match rendered {
            Ok(text) => unsafe { write_string(text, out) },
            Err(e) => fail(&e),
        }
    })
}

/// Draws the decomposition (or, when `mixed` is nonzero, the dual mixed
/// subdivision of the dilated simplex) as an SVG document. Supported for
/// d = 3 only.
///
/// # Safety
/// `h` must be null or a live handle; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn trop_complex_render_svg(
    h: *const TropComplexHandle,
    mixed: i32,
    out: *mut *mut c_char,
) -> TropStatus {
    guarded(|| {
        let Some(h) = (unsafe { handle_ref(h) }) else {
            return null_argument("h");
        };
        let rendered = if mixed != 0 {
            MixedSubdivision::from_tropical_complex(&h.tc).and_then(|ms| render_mixed_svg(&ms))
        } else {
            render_arrangement_svg(&h.tc)
        };
        match rendered {
            Ok(svg) => unsafe { write_string(svg, out) },
            Err(e) => fail(&e),
        }
    })
}

/// Runs the full invariant suite on the handle's document. Returns the
/// success status when every check passes and the invariant-violation
/// status when one fails; in both cases the per-check report is written to
/// `out` unless `out` is null.
///
/// # Safety
/// `h` must be null or a live handle; `out` null or valid for one write.
#[no_mangle]
pub unsafe extern "C" fn trop_complex_verify(
    h: *const TropComplexHandle,
    out: *mut *mut c_char,
) -> TropStatus {
    guarded(|| {
        let Some(h) = (unsafe { handle_ref(h) }) else {
            return null_argument("h");
        };
        let outcome = match verify_all(&h.doc) {
            Ok(outcome) => outcome,
            Err(e) => return fail(&e),
        };
        if !out.is_null() {
            let status = unsafe { write_string(outcome.render(), out) };
            if status != TropStatus::Ok {
                return status;
            }
        }
        if outcome.passed() {
            TropStatus::Ok
        } else {
            set_last_error("invariant suite reported failing checks");
            TropStatus::InvariantViolation
        }
    })
}

/// Generates a random generic arrangement document as pretty-printed JSON.
/// The same seed always yields the same document.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn trop_generate_document(
    n: usize,
    d: usize,
    seed: u64,
    out: *mut *mut c_char,
) -> TropStatus {
    guarded(|| match generate_random_generic(n, d, seed) {
        Ok(doc) => unsafe { write_string(render_document(&doc), out) },
        Err(e) => fail(&e),
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn trop_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Message describing the most recent failure on this thread, or an empty
/// string. The pointer stays valid until the next failing call on the same
/// thread; do not free it.
#[no_mangle]
pub extern "C" fn trop_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}
