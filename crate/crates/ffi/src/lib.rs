//! C interface to `khrot`.
//!
//! Diagrams and homology tables are opaque heap handles released with their
//! `*_free` function. Fallible calls return a [`KhrotStatus`]; the message of
//! the most recent failure on the calling thread is available from
//! [`khrot_last_error`]. Strings handed out by the library must be released
//! with [`khrot_free_string`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use khrot::bracket::{jones_reduced, kauffman_bracket, unnormalized_jones};
use khrot::khovanov::{compare_tables, khovanov, CoefficientRing, Engine, GradedTable};
use khrot::linkdiag::Diagram;
use khrot::rotant::grading_params;
use serde_json::json;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KhrotStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed PD code, JSON or selector string.
    Parse = 3,
    /// The computation refused the input (e.g. too many crossings for the
    /// naive engine, mismatched rings).
    Compute = 4,
    Panic = 5,
}

/// An oriented link diagram.
pub struct KhrotDiagram(Diagram);

/// A bigraded homology table.
pub struct KhrotTable(GradedTable);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl ToString) {
    let c = CString::new(msg.to_string().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: KhrotStatus, msg: impl ToString) -> KhrotStatus {
    set_error(msg);
    status
}

/// Runs `f`, turning panics into [`KhrotStatus::Panic`].
fn guard(f: impl FnOnce() -> KhrotStatus) -> KhrotStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(KhrotStatus::Panic, "internal panic"),
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, KhrotStatus> {
    if s.is_null() {
        return Err(fail(KhrotStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s).to_str().map_err(|e| fail(KhrotStatus::InvalidUtf8, e))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> KhrotStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            KhrotStatus::Ok
        }
        Err(e) => fail(KhrotStatus::Compute, e),
    }
}

/// The message of the last failed call on this thread, or NULL. The caller
/// owns the returned string.
#[no_mangle]
pub extern "C" fn khrot_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().clone()).map_or(ptr::null_mut(), CString::into_raw)
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn khrot_free_string(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses PD text (`PD[X[1,5,2,4],...]`) or diagram JSON into a new handle.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn khrot_diagram_parse(text: *const c_char, out: *mut *mut KhrotDiagram) -> KhrotStatus {
    guard(|| {
        if out.is_null() {
            return fail(KhrotStatus::NullPointer, "null output pointer");
        }
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match khrot::cli::load_diagram(text) {
            Ok(d) => {
                *out = Box::into_raw(Box::new(KhrotDiagram(d)));
                KhrotStatus::Ok
            }
            Err(e) => fail(KhrotStatus::Parse, e),
        }
    })
}

/// # Safety
/// `d` must be NULL or a handle from [`khrot_diagram_parse`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn khrot_diagram_free(d: *mut KhrotDiagram) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Number of crossings, or -1 for a NULL handle.
///
/// # Safety
/// `d` must be NULL or a live diagram handle.
#[no_mangle]
pub unsafe extern "C" fn khrot_diagram_crossings(d: *const KhrotDiagram) -> i64 {
    d.as_ref().map_or(-1, |d| d.0.num_crossings() as i64)
}

/// Writhe of the diagram (0 for a NULL handle).
///
/// # Safety
/// `d` must be NULL or a live diagram handle.
#[no_mangle]
pub unsafe extern "C" fn khrot_diagram_writhe(d: *const KhrotDiagram) -> i64 {
    d.as_ref().map_or(0, |d| d.0.writhe())
}

/// JSON object with the Kauffman bracket, the unnormalized Jones polynomial
/// and (when defined) the reduced Jones polynomial in `q` and `t`.
///
/// # Safety
/// `d` must be a live diagram handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn khrot_jones_json(d: *const KhrotDiagram, out: *mut *mut c_char) -> KhrotStatus {
    guard(|| {
        let Some(d) = d.as_ref() else { return fail(KhrotStatus::NullPointer, "null diagram") };
        if out.is_null() {
            return fail(KhrotStatus::NullPointer, "null output pointer");
        }
        let reduced = jones_reduced(&d.0);
        let v = json!({
            "bracket": kauffman_bracket(&d.0).to_json_value("A"),
            "unnormalized": unnormalized_jones(&d.0).to_json_value("q"),
            "reduced": reduced.divisible.then(|| reduced.q_form.to_json_value("q")),
            "reduced_t": reduced.divisible.then(|| reduced.t_form.to_json_value("t")),
        });
        write_string(out, v.to_string())
    })
}

/// Computes Khovanov homology. `ring` is `q`, `z` or `fP` (`f2`, `f3`, ...);
/// `engine` is `naive`, `scan` or `auto` (NULL means `auto`).
///
/// # Safety
/// `d` must be a live diagram handle, `ring` a NUL-terminated string,
/// `engine` NULL or NUL-terminated, and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn khrot_khovanov(
    d: *const KhrotDiagram,
    ring: *const c_char,
    engine: *const c_char,
    out: *mut *mut KhrotTable,
) -> KhrotStatus {
    guard(|| {
        let Some(d) = d.as_ref() else { return fail(KhrotStatus::NullPointer, "null diagram") };
        if out.is_null() {
            return fail(KhrotStatus::NullPointer, "null output pointer");
        }
        let ring: CoefficientRing = match read_str(ring).map(str::parse) {
            Ok(Ok(r)) => r,
            Ok(Err(e)) => return fail(KhrotStatus::Parse, e),
            Err(s) => return s,
        };
        let engine: Engine = if engine.is_null() {
            Engine::Auto
        } else {
            match read_str(engine).map(str::parse) {
                Ok(Ok(e)) => e,
                Ok(Err(e)) => return fail(KhrotStatus::Parse, e),
                Err(s) => return s,
            }
        };
        match khovanov(&d.0, ring, engine) {
            Ok(t) => {
                *out = Box::into_raw(Box::new(KhrotTable(t)));
                KhrotStatus::Ok
            }
            Err(e) => fail(KhrotStatus::Compute, e),
        }
    })
}

/// # Safety
/// `t` must be NULL or a handle from [`khrot_khovanov`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn khrot_table_free(t: *mut KhrotTable) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Free rank at `(t, q)` (0 for a NULL handle).
///
/// # Safety
/// `table` must be NULL or a live table handle.
#[no_mangle]
pub unsafe extern "C" fn khrot_table_rank(table: *const KhrotTable, t: i64, q: i64) -> u64 {
    table.as_ref().map_or(0, |x| x.0.rank(t, q))
}

/// Number of cyclic torsion summands at `(t, q)`.
///
/// # Safety
/// `table` must be NULL or a live table handle.
#[no_mangle]
pub unsafe extern "C" fn khrot_table_torsion_count(table: *const KhrotTable, t: i64, q: i64) -> u64 {
    table.as_ref().map_or(0, |x| x.0.get(t, q).torsion.len() as u64)
}

/// Renders the table as `json`, `csv` or `text`.
///
/// # Safety
/// `table` must be a live table handle, `format` NUL-terminated and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn khrot_table_render(
    table: *const KhrotTable,
    format: *const c_char,
    out: *mut *mut c_char,
) -> KhrotStatus {
    guard(|| {
        let Some(table) = table.as_ref() else { return fail(KhrotStatus::NullPointer, "null table") };
        if out.is_null() {
            return fail(KhrotStatus::NullPointer, "null output pointer");
        }
        let s = match read_str(format) {
            Ok("json") => table.0.to_json(),
            Ok("csv") => table.0.to_csv(),
            Ok("text") => table.0.to_text_grid(),
            Ok(other) => return fail(KhrotStatus::Parse, format!("unknown format {other:?}")),
            Err(s) => return s,
        };
        write_string(out, s)
    })
}

/// Number of cells where the two tables differ.
///
/// # Safety
/// `a` and `b` must be live table handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn khrot_table_diff_count(
    a: *const KhrotTable,
    b: *const KhrotTable,
    out: *mut u64,
) -> KhrotStatus {
    guard(|| {
        let (Some(a), Some(b)) = (a.as_ref(), b.as_ref()) else {
            return fail(KhrotStatus::NullPointer, "null table");
        };
        if out.is_null() {
            return fail(KhrotStatus::NullPointer, "null output pointer");
        }
        match compare_tables(&a.0, &b.0) {
            Ok(diff) => {
                *out = diff.cells.len() as u64;
                KhrotStatus::Ok
            }
            Err(e) => fail(KhrotStatus::Compute, e),
        }
    })
}

/// Quantum grading `Q(n)` and shift `c` of the twist family.
///
/// # Safety
/// `q` and `c` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn khrot_grading_params(n: u64, q: *mut i64, c: *mut i64) -> KhrotStatus {
    if q.is_null() || c.is_null() {
        return fail(KhrotStatus::NullPointer, "null output pointer");
    }
    let p = grading_params(n);
    *q = p.q;
    *c = p.c;
    KhrotStatus::Ok
}

/// Library version (static, do not free).
#[no_mangle]
pub extern "C" fn khrot_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
