//! C ABI over `rainbow-core`.
//!
//! Graphs and colorings cross the boundary as opaque handles that the caller
//! frees with the matching `*_free` function. Every fallible call returns an
//! [`RbStatus`]; on failure a description is available from
//! [`rb_last_error_message`] until the next call on the same thread. Panics
//! never unwind into C: they are caught and reported as
//! [`RbStatus::Panic`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{self, AssertUnwindSafe};
use std::ptr;

use rainbow_core::graph::diameter;
use rainbow_core::rainbow::is_rainbow_k_connected;
use rainbow_core::{random_coloring, sample_gnp, thresholds, BipartiteGraph, EdgeColoring, Error};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidVertex = 3,
    MissingEdge = 4,
    ColoringMismatch = 5,
    ResourceGuard = 6,
    Parse = 7,
    Io = 8,
    Panic = 9,
}

/// Opaque bipartite graph.
pub struct RbGraph(BipartiteGraph);

/// Opaque edge coloring of a specific graph.
pub struct RbColoring(EdgeColoring);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure {
    status: RbStatus,
    message: String,
}

impl Failure {
    fn null(what: &str) -> Self {
        Failure { status: RbStatus::NullPointer, message: format!("{what} is null") }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::InvalidVertex(_) => RbStatus::InvalidVertex,
            Error::MissingEdge(..) => RbStatus::MissingEdge,
            Error::ColoringMismatch { .. } | Error::ColorOutOfRange { .. } => RbStatus::ColoringMismatch,
            Error::ResourceGuard { .. } => RbStatus::ResourceGuard,
            Error::Parse { .. } | Error::Csv(_) | Error::Json(_) => RbStatus::Parse,
            Error::Io(_) => RbStatus::Io,
            _ => RbStatus::InvalidArgument,
        };
        Failure { status, message: e.to_string() }
    }
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn call<F>(f: F) -> RbStatus
where
    F: FnOnce() -> Result<(), Failure>,
{
    match panic::catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            RbStatus::Ok
        }
        Ok(Err(failure)) => {
            set_error(failure.message);
            failure.status
        }
        Err(payload) => {
            let detail = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {detail}"));
            RbStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure::null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn slice<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(Failure::null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

/// Message of the last failed call on this thread, or NULL. The pointer is
/// owned by the library and valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn rb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Frees a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn rb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Samples `G(m, n, p)` into `*out`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn rb_graph_sample(m: usize, n: usize, p: f64, seed: u64, out: *mut *mut RbGraph) -> RbStatus {
    call(|| {
        let g = sample_gnp(m, n, p, seed)?;
        write_out(out, Box::into_raw(Box::new(RbGraph(g))), "out")
    })
}

/// Builds a graph from `len` edges `(us[i], vs[i])`, left index first.
///
/// # Safety
/// `us` and `vs` must point to `len` readable elements; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rb_graph_from_edges(
    m: usize,
    n: usize,
    us: *const usize,
    vs: *const usize,
    len: usize,
    out: *mut *mut RbGraph,
) -> RbStatus {
    call(|| {
        let (us, vs) = (slice(us, len, "us")?, slice(vs, len, "vs")?);
        let g = BipartiteGraph::from_edges(m, n, us.iter().copied().zip(vs.iter().copied()))?;
        write_out(out, Box::into_raw(Box::new(RbGraph(g))), "out")
    })
}

/// Parses the edge-list text format.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rb_graph_from_text(text: *const c_char, out: *mut *mut RbGraph) -> RbStatus {
    call(|| {
        if text.is_null() {
            return Err(Failure::null("text"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| Failure { status: RbStatus::Parse, message: "text is not UTF-8".into() })?;
        let g = BipartiteGraph::from_text(text)?;
        write_out(out, Box::into_raw(Box::new(RbGraph(g))), "out")
    })
}

/// Writes the edge-list text of `g` into `*out`; free it with [`rb_string_free`].
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rb_graph_to_text(g: *const RbGraph, out: *mut *mut c_char) -> RbStatus {
    call(|| {
        let g = deref(g, "graph")?;
        let text = CString::new(g.0.to_text()).expect("graph text has no NUL");
        write_out(out, text.into_raw(), "out")
    })
}

/// Releases a graph. NULL is ignored.
///
/// # Safety
/// `g` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn rb_graph_free(g: *mut RbGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Left partite size, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rb_graph_left_size(g: *const RbGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.left_size())
}

/// Right partite size, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rb_graph_right_size(g: *const RbGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.right_size())
}

/// Number of edges, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rb_graph_edge_count(g: *const RbGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Endpoints of edge `index` in sorted edge order.
///
/// # Safety
/// `g` must be a live handle; `u` and `v` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rb_graph_edge(g: *const RbGraph, index: usize, u: *mut usize, v: *mut usize) -> RbStatus {
    call(|| {
        let g = deref(g, "graph")?;
        let (a, b) = g.0.edges().nth(index).ok_or_else(|| Failure {
            status: RbStatus::InvalidArgument,
            message: format!("edge index {index} out of range"),
        })?;
        write_out(u, a, "u")?;
        write_out(v, b, "v")
    })
}

/// Diameter of `g`. `*connected` is false (and `*out` untouched) when the
/// graph is disconnected.
///
/// # Safety
/// `g` must be a live handle; `out` and `connected` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rb_graph_diameter(g: *const RbGraph, out: *mut usize, connected: *mut bool) -> RbStatus {
    call(|| {
        let g = deref(g, "graph")?;
        if out.is_null() {
            return Err(Failure::null("out"));
        }
        match diameter(&g.0) {
            Some(d) => {
                out.write(d);
                write_out(connected, true, "connected")
            }
            None => write_out(connected, false, "connected"),
        }
    })
}

/// Colors every edge of `g` uniformly from `1..=colors`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rb_coloring_random(
    g: *const RbGraph,
    colors: u32,
    seed: u64,
    out: *mut *mut RbColoring,
) -> RbStatus {
    call(|| {
        let g = deref(g, "graph")?;
        let c = random_coloring(&g.0, colors, seed)?;
        write_out(out, Box::into_raw(Box::new(RbColoring(c))), "out")
    })
}

/// Coloring with `colors[i]` on edge `i` (sorted edge order), palette `1..=num_colors`.
///
/// # Safety
/// `g` must be a live handle, `colors` must point to `len` elements and
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rb_coloring_from_colors(
    g: *const RbGraph,
    num_colors: u32,
    colors: *const u32,
    len: usize,
    out: *mut *mut RbColoring,
) -> RbStatus {
    call(|| {
        let g = deref(g, "graph")?;
        let c = EdgeColoring::new(&g.0, num_colors, slice(colors, len, "colors")?.to_vec())?;
        write_out(out, Box::into_raw(Box::new(RbColoring(c))), "out")
    })
}

/// Color of edge `index`.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rb_coloring_color(c: *const RbColoring, index: usize, out: *mut u32) -> RbStatus {
    call(|| {
        let c = deref(c, "coloring")?;
        let color = c.0.color_of_edge(index).ok_or_else(|| Failure {
            status: RbStatus::InvalidArgument,
            message: format!("edge index {index} out of range"),
        })?;
        write_out(out, color, "out")
    })
}

/// Releases a coloring. NULL is ignored.
///
/// # Safety
/// `c` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn rb_coloring_free(c: *mut RbColoring) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Whether every vertex pair of `g` has `k` internally disjoint rainbow
/// paths of length at most `max_len` (0 means unbounded).
///
/// # Safety
/// `g` and `c` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rb_is_rainbow_k_connected(
    g: *const RbGraph,
    c: *const RbColoring,
    k: usize,
    max_len: usize,
    out: *mut bool,
) -> RbStatus {
    call(|| {
        let (g, c) = (deref(g, "graph")?, deref(c, "coloring")?);
        let bound = (max_len > 0).then_some(max_len);
        let verdict = is_rainbow_k_connected(&g.0, &c.0, k, bound)?;
        write_out(out, verdict.rainbow_k_connected, "out")
    })
}

/// Threshold for odd `d`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rb_p1(m: usize, n: usize, d: usize, out: *mut f64) -> RbStatus {
    call(|| write_out(out, thresholds::p1(m, n, d)?, "out"))
}

/// Threshold for even `d`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rb_p2(m: usize, n: usize, d: usize, out: *mut f64) -> RbStatus {
    call(|| write_out(out, thresholds::p2(m, n, d)?, "out"))
}

/// `rb_p1` or `rb_p2` according to the parity of `d`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rb_threshold(m: usize, n: usize, d: usize, out: *mut f64) -> RbStatus {
    call(|| write_out(out, thresholds::threshold(m, n, d)?, "out"))
}
