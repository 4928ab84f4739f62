//! C ABI over `matchext`.
//!
//! Graphs are opaque [`MxGraph`] handles released with [`mx_graph_free`].
//! Every fallible call returns an [`MxStatus`]; on failure the message is
//! available from [`mx_last_error`] on the same thread. Strings handed out
//! by the library are released with [`mx_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use matchext::extend::{
    is_emn_extendable, is_emn_extendable_with, is_k_extendable, is_n_factor_critical,
    is_nk_extendable, EmnMode, ExtendabilityVerdict, Guards,
};
use matchext::graph::io::{from_graph6, to_graph6};
use matchext::matching::has_perfect_matching;
use matchext::params::{binding_number, toughness};
use matchext::{Error, Graph, Rational};

/// Opaque graph handle.
pub struct MxGraph {
    inner: Graph,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MxStatus {
    Ok = 0,
    InvalidArgument = 1,
    ParseError = 2,
    ResourceLimit = 3,
    Undefined = 4,
    Io = 5,
    NullPointer = 6,
    Panic = 7,
}

/// Exact rational; `infinite` set means `+∞` and `num`/`den` are zero.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MxRational {
    pub num: i64,
    pub den: i64,
    pub infinite: bool,
}

impl From<Rational> for MxRational {
    fn from(r: Rational) -> Self {
        match (r.numer(), r.denom()) {
            (Some(num), Some(den)) => MxRational { num, den, infinite: false },
            _ => MxRational { num: 0, den: 0, infinite: true },
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> MxStatus {
    match e {
        Error::InvalidArgument(_) => MxStatus::InvalidArgument,
        Error::Parse { .. } => MxStatus::ParseError,
        Error::ResourceLimit { .. } => MxStatus::ResourceLimit,
        Error::UndefinedParameter(_) => MxStatus::Undefined,
        Error::Io(_) => MxStatus::Io,
    }
}

enum Failure {
    Lib(Error),
    Null(&'static str),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

/// Runs `f`, converting errors and panics into a status plus last-error text.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> MxStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            MxStatus::Ok
        }
        Ok(Err(Failure::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Failure::Null(what))) => {
            set_error(format!("null pointer: {what}"));
            MxStatus::NullPointer
        }
        Err(_) => {
            set_error("internal panic".into());
            MxStatus::Panic
        }
    }
}

unsafe fn graph_ref<'a>(g: *const MxGraph) -> Result<&'a Graph, Failure> {
    // SAFETY: the caller passes a handle from this library or null.
    unsafe { g.as_ref() }.map(|h| &h.inner).ok_or(Failure::Null("graph"))
}

unsafe fn out_ref<'a, T>(p: *mut T, what: &'static str) -> Result<&'a mut T, Failure> {
    // SAFETY: the caller passes a writable pointer or null.
    unsafe { p.as_mut() }.ok_or(Failure::Null(what))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("library strings contain no NUL").into_raw()
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call into the library from this thread.
#[no_mangle]
pub extern "C" fn mx_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `text` must be a NUL-terminated string; `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn mx_graph_from_graph6(text: *const c_char, out: *mut *mut MxGraph) -> MxStatus {
    guard(|| {
        let out = unsafe { out_ref(out, "out") }?;
        if text.is_null() {
            return Err(Failure::Null("text"));
        }
        // SAFETY: checked non-null; the caller guarantees NUL termination.
        let text = unsafe { CStr::from_ptr(text) }
            .to_str()
            .map_err(|e| Error::parse(e.valid_up_to(), "graph6 text is not UTF-8"))?;
        let g = from_graph6(text)?;
        *out = Box::into_raw(Box::new(MxGraph { inner: g }));
        Ok(())
    })
}

/// Builds a graph on `n` vertices from `m` edges laid out as
/// `edges[2i], edges[2i+1]`.
///
/// # Safety
/// `edges` must point to `2 * m` values (may be null when `m == 0`);
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mx_graph_from_edges(
    n: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut MxGraph,
) -> MxStatus {
    guard(|| {
        let out = unsafe { out_ref(out, "out") }?;
        let flat: &[usize] = if m == 0 {
            &[]
        } else if edges.is_null() {
            return Err(Failure::Null("edges"));
        } else {
            // SAFETY: the caller guarantees 2m readable values.
            unsafe { std::slice::from_raw_parts(edges, 2 * m) }
        };
        let g = Graph::new(n, flat.chunks_exact(2).map(|p| (p[0], p[1])))?;
        *out = Box::into_raw(Box::new(MxGraph { inner: g }));
        Ok(())
    })
}

/// # Safety
/// `g` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mx_graph_free(g: *mut MxGraph) {
    if !g.is_null() {
        // SAFETY: ownership returns from the caller.
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Number of vertices; 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mx_graph_order(g: *const MxGraph) -> usize {
    unsafe { graph_ref(g) }.map_or(0, Graph::order)
}

/// # Safety
/// `g` must be a live handle; `out` writable. Free the result with [`mx_string_free`].
#[no_mangle]
pub unsafe extern "C" fn mx_graph_to_graph6(g: *const MxGraph, out: *mut *mut c_char) -> MxStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        *unsafe { out_ref(out, "out") }? = into_c_string(to_graph6(g));
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn mx_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: produced by CString::into_raw in this library.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// # Safety
/// `g` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mx_binding_number(g: *const MxGraph, out: *mut MxRational) -> MxStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        *unsafe { out_ref(out, "out") }? = binding_number(g)?.value.into();
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mx_toughness(g: *const MxGraph, out: *mut MxRational) -> MxStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        *unsafe { out_ref(out, "out") }? = toughness(g)?.value.into();
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mx_vertex_connectivity(g: *const MxGraph, out: *mut usize) -> MxStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        *unsafe { out_ref(out, "out") }? = g.vertex_connectivity();
        Ok(())
    })
}

/// Girth, or 0 for a forest.
///
/// # Safety
/// `g` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mx_girth(g: *const MxGraph, out: *mut usize) -> MxStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        *unsafe { out_ref(out, "out") }? = g.girth().unwrap_or(0);
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mx_has_perfect_matching(g: *const MxGraph, out: *mut bool) -> MxStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        *unsafe { out_ref(out, "out") }? = has_perfect_matching(g);
        Ok(())
    })
}

unsafe fn report(
    verdict: Result<ExtendabilityVerdict, Error>,
    holds: *mut bool,
    certificate_json: *mut *mut c_char,
) -> Result<(), Failure> {
    let verdict = verdict?;
    *unsafe { out_ref(holds, "holds") }? = verdict.holds;
    // SAFETY: optional out-parameter, null means "not wanted".
    if let Some(slot) = unsafe { certificate_json.as_mut() } {
        *slot = match &verdict.certificate {
            Some(c) => into_c_string(serde_json::to_string(c).expect("certificate serializes")),
            None => ptr::null_mut(),
        };
    }
    Ok(())
}

/// Writes the verdict to `holds`. When `certificate_json` is non-null it
/// receives the failure certificate as JSON (null when the property holds).
///
/// # Safety
/// `g` must be a live handle; `holds` writable; `certificate_json` null or writable.
#[no_mangle]
pub unsafe extern "C" fn mx_is_k_extendable(
    g: *const MxGraph,
    k: usize,
    holds: *mut bool,
    certificate_json: *mut *mut c_char,
) -> MxStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        unsafe { report(is_k_extendable(g, k), holds, certificate_json) }
    })
}

/// # Safety
/// As [`mx_is_k_extendable`].
#[no_mangle]
pub unsafe extern "C" fn mx_is_n_factor_critical(
    g: *const MxGraph,
    n: usize,
    holds: *mut bool,
    certificate_json: *mut *mut c_char,
) -> MxStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        unsafe { report(is_n_factor_critical(g, n), holds, certificate_json) }
    })
}

/// # Safety
/// As [`mx_is_k_extendable`].
#[no_mangle]
pub unsafe extern "C" fn mx_is_nk_extendable(
    g: *const MxGraph,
    n: usize,
    k: usize,
    holds: *mut bool,
    certificate_json: *mut *mut c_char,
) -> MxStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        unsafe { report(is_nk_extendable(g, n, k), holds, certificate_json) }
    })
}

/// `strict_disjoint` additionally requires `M ∪ N` to be a matching.
///
/// # Safety
/// As [`mx_is_k_extendable`].
#[no_mangle]
pub unsafe extern "C" fn mx_is_emn_extendable(
    g: *const MxGraph,
    m: usize,
    n: usize,
    strict_disjoint: bool,
    holds: *mut bool,
    certificate_json: *mut *mut c_char,
) -> MxStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        let verdict = if strict_disjoint {
            is_emn_extendable_with(g, m, n, EmnMode::VertexDisjoint, &Guards::default())
        } else {
            is_emn_extendable(g, m, n)
        };
        unsafe { report(verdict, holds, certificate_json) }
    })
}
