//! C ABI over `lrhorn`.
//!
//! Every fallible function returns an [`LrhornStatus`] and writes its result
//! through an out-pointer. On failure a message is kept per thread and can be
//! read with [`lrhorn_last_error_message`]. Objects are opaque handles that
//! must be released with the matching `*_free` function. Panics never cross
//! the boundary; they surface as `LRHORN_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lrhorn::graphs::parse_bipartite;
use lrhorn::horn::{horn_compatible, horn_compatible_partitions, SpectrumVector};
use lrhorn::spectra::{analyze_line_graph, ramanujan_verdict, CandidateSet, SpectrumReport};
use lrhorn::{BipartiteGraph, Error, Partition};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LrhornStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Precondition = 3,
    TheoremViolation = 4,
    Overflow = 5,
    Parse = 6,
    Io = 7,
    Panic = 8,
}

/// Bipartite graph with explicit colour classes.
pub struct LrhornGraph(BipartiteGraph);

/// Line graph analysis of one bipartite graph.
pub struct LrhornReport(SpectrumReport);

/// The candidate set `P(alpha, beta)`.
pub struct LrhornCandidateSet(CandidateSet);

/// Ramanujan verdicts for a regular line graph.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct LrhornRamanujan {
    pub degree: usize,
    pub lambda2: f64,
    pub least: f64,
    pub bound: f64,
    pub exact: bool,
    pub second_largest: bool,
    pub all_nontrivial: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(LrhornStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::InvalidArgument(_) => LrhornStatus::InvalidArgument,
            Error::Precondition(_) => LrhornStatus::Precondition,
            Error::TheoremViolation(_) => LrhornStatus::TheoremViolation,
            Error::Parse(_) => LrhornStatus::Parse,
            Error::Io(_) => LrhornStatus::Io,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(LrhornStatus::NullPointer, format!("{what} is null"))
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure(LrhornStatus::InvalidArgument, msg.into())
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> LrhornStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LrhornStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("panic: {msg}"));
            LrhornStatus::Panic
        }
    }
}

unsafe fn slice<'a, T>(data: *const T, len: usize, what: &str) -> Result<&'a [T], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if data.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(data, len))
}

unsafe fn partition(data: *const u64, len: usize, what: &str) -> Result<Partition, Failure> {
    Ok(Partition::new(slice(data, len, what)?.to_vec()))
}

unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

/// Message of the last failed call on this thread, or NULL. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn lrhorn_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn lrhorn_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Empty graph with `x_size` and `y_size` vertices in the two classes.
///
/// # Safety
/// `out_graph` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lrhorn_graph_new(
    x_size: usize,
    y_size: usize,
    out_graph: *mut *mut LrhornGraph,
) -> LrhornStatus {
    guard(|| {
        let slot = out(out_graph, "out_graph")?;
        let g = BipartiteGraph::new(x_size, y_size, std::iter::empty())?;
        *slot = Box::into_raw(Box::new(LrhornGraph(g)));
        Ok(())
    })
}

/// Parses the text or JSON graph format.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out_graph` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lrhorn_graph_parse(
    text: *const c_char,
    out_graph: *mut *mut LrhornGraph,
) -> LrhornStatus {
    guard(|| {
        let slot = out(out_graph, "out_graph")?;
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| Failure(LrhornStatus::Parse, "graph text is not UTF-8".into()))?;
        let g = parse_bipartite(s)?;
        *slot = Box::into_raw(Box::new(LrhornGraph(g)));
        Ok(())
    })
}

/// Adds the edge `x ~ y`.
///
/// # Safety
/// `graph` must come from this library and not be freed.
#[no_mangle]
pub unsafe extern "C" fn lrhorn_graph_add_edge(
    graph: *mut LrhornGraph,
    x: usize,
    y: usize,
) -> LrhornStatus {
    guard(|| {
        let g = out(graph, "graph")?;
        g.0.add_edge(x, y)?;
        Ok(())
    })
}

/// # Safety
/// `graph` must come from this library; `out_count` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lrhorn_graph_edge_count(
    graph: *const LrhornGraph,
    out_count: *mut usize,
) -> LrhornStatus {
    guard(|| {
        *out(out_count, "out_count")? = handle(graph, "graph")?.0.edge_count();
        Ok(())
    })
}

/// # Safety
/// `graph` must be NULL or come from this library and not be freed yet.
#[no_mangle]
pub unsafe extern "C" fn lrhorn_graph_free(graph: *mut LrhornGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Analyzes the line graph of a connected bipartite graph.
///
/// # Safety
/// `graph` must come from this library; `out_report` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lrhorn_analyze(
    graph: *const LrhornGraph,
    out_report: *mut *mut LrhornReport,
) -> LrhornStatus {
    guard(|| {
        let slot = out(out_report, "out_report")?;
        let r = analyze_line_graph(&handle(graph, "graph")?.0)?;
        *slot = Box::into_raw(Box::new(LrhornReport(r)));
        Ok(())
    })
}

/// # Safety
/// `report` must come from this library; `out_flag` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lrhorn_report_is_integral(
    report: *const LrhornReport,
    out_flag: *mut bool,
) -> LrhornStatus {
    guard(|| {
        *out(out_flag, "out_flag")? = handle(report, "report")?.0.is_integral;
        Ok(())
    })
}

/// Number of failed theorem checks recorded in the report.
///
/// # Safety
/// `report` must come from this library; `out_count` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lrhorn_report_violation_count(
    report: *const LrhornReport,
    out_count: *mut usize,
) -> LrhornStatus {
    guard(|| {
        *out(out_count, "out_count")? = handle(report, "report")?.0.violations.len();
        Ok(())
    })
}

/// JSON encoding of the report. Release it with [`lrhorn_string_free`].
///
/// # Safety
/// `report` must come from this library; `out_json` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lrhorn_report_to_json(
    report: *const LrhornReport,
    out_json: *mut *mut c_char,
) -> LrhornStatus {
    guard(|| {
        let slot = out(out_json, "out_json")?;
        let json = serde_json::to_string(&handle(report, "report")?.0)
            .map_err(|e| invalid(e.to_string()))?;
        *slot = CString::new(json)
            .map_err(|e| invalid(e.to_string()))?
            .into_raw();
        Ok(())
    })
}

/// # Safety
/// `report` must be NULL or come from this library and not be freed yet.
#[no_mangle]
pub unsafe extern "C" fn lrhorn_report_free(report: *mut LrhornReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lrhorn_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Ramanujan verdicts for the line graph of `graph`, which must be regular.
///
/// # Safety
/// `graph` must come from this library; `out_verdict` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lrhorn_line_graph_ramanujan(
    graph: *const LrhornGraph,
    out_verdict: *mut LrhornRamanujan,
) -> LrhornStatus {
    guard(|| {
        let slot = out(out_verdict, "out_verdict")?;
        let line = handle(graph, "graph")?.0.line_graph()?;
        let k = line
            .regular_degree()
            .ok_or_else(|| invalid("line graph is not regular"))?;
        let v = ramanujan_verdict(&line, k)?;
        *slot = LrhornRamanujan {
            degree: v.degree,
            lambda2: v.lambda2,
            least: v.least,
            bound: v.bound,
            exact: v.exact,
            second_largest: v.ramanujan_second_largest,
            all_nontrivial: v.ramanujan_all_nontrivial,
        };
        Ok(())
    })
}

/// `c^gamma_{alpha beta}`; fails with `LRHORN_STATUS_OVERFLOW` when the
/// value does not fit in 64 bits. Partitions are arrays of parts in any
/// order; zeros are ignored.
///
/// # Safety
/// Each array must hold its stated number of elements (or be NULL with
/// length 0); `out_value` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lrhorn_lr_coefficient(
    alpha: *const u64,
    alpha_len: usize,
    beta: *const u64,
    beta_len: usize,
    gamma: *const u64,
    gamma_len: usize,
    out_value: *mut u64,
) -> LrhornStatus {
    guard(|| {
        let slot = out(out_value, "out_value")?;
        let (a, b, g) = (
            partition(alpha, alpha_len, "alpha")?,
            partition(beta, beta_len, "beta")?,
            partition(gamma, gamma_len, "gamma")?,
        );
        *slot = lrhorn::lr::lr_coefficient_u64(&a, &b, &g)
            .ok_or_else(|| Failure(LrhornStatus::Overflow, "coefficient exceeds 64 bits".into()))?;
        Ok(())
    })
}

/// Whether `c^gamma_{alpha beta} > 0`.
///
/// # Safety
/// As for [`lrhorn_lr_coefficient`].
#[no_mangle]
pub unsafe extern "C" fn lrhorn_lr_positive(
    alpha: *const u64,
    alpha_len: usize,
    beta: *const u64,
    beta_len: usize,
    gamma: *const u64,
    gamma_len: usize,
    out_flag: *mut bool,
) -> LrhornStatus {
    guard(|| {
        let slot = out(out_flag, "out_flag")?;
        let (a, b, g) = (
            partition(alpha, alpha_len, "alpha")?,
            partition(beta, beta_len, "beta")?,
            partition(gamma, gamma_len, "gamma")?,
        );
        *slot = lrhorn::lr_positive(&a, &b, &g);
        Ok(())
    })
}

/// Exact Horn check on partitions padded with zeros to length `n`.
///
/// # Safety
/// As for [`lrhorn_lr_coefficient`].
#[no_mangle]
pub unsafe extern "C" fn lrhorn_horn_compatible_partitions(
    alpha: *const u64,
    alpha_len: usize,
    beta: *const u64,
    beta_len: usize,
    gamma: *const u64,
    gamma_len: usize,
    n: usize,
    out_flag: *mut bool,
) -> LrhornStatus {
    guard(|| {
        let slot = out(out_flag, "out_flag")?;
        let (a, b, g) = (
            partition(alpha, alpha_len, "alpha")?,
            partition(beta, beta_len, "beta")?,
            partition(gamma, gamma_len, "gamma")?,
        );
        *slot = horn_compatible_partitions(&a, &b, &g, n)?;
        Ok(())
    })
}

/// Numeric Horn check on three real spectra of length `n`, given in any
/// order, with absolute tolerance `tol`.
///
/// # Safety
/// Each array must hold `n` elements; `out_flag` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lrhorn_horn_compatible_f64(
    alpha: *const f64,
    beta: *const f64,
    gamma: *const f64,
    n: usize,
    tol: f64,
    out_flag: *mut bool,
) -> LrhornStatus {
    guard(|| {
        let slot = out(out_flag, "out_flag")?;
        let vecs = [(alpha, "alpha"), (beta, "beta"), (gamma, "gamma")]
            .into_iter()
            .map(|(p, what)| {
                let v = slice(p, n, what)?.to_vec();
                if v.iter().any(|x| !x.is_finite()) {
                    return Err(invalid(format!("{what} has a non-finite entry")));
                }
                Ok(SpectrumVector::from_unsorted(v))
            })
            .collect::<Result<Vec<_>, Failure>>()?;
        if n == 0 {
            return Err(invalid("n must be positive"));
        }
        *slot = horn_compatible(&vecs[0], &vecs[1], &vecs[2], tol)?;
        Ok(())
    })
}

/// Computes `P(alpha, beta)`. Release it with [`lrhorn_candidate_set_free`].
///
/// # Safety
/// As for [`lrhorn_lr_coefficient`]; `out_set` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lrhorn_enumerate_p(
    alpha: *const u64,
    alpha_len: usize,
    beta: *const u64,
    beta_len: usize,
    out_set: *mut *mut LrhornCandidateSet,
) -> LrhornStatus {
    guard(|| {
        let slot = out(out_set, "out_set")?;
        let a = partition(alpha, alpha_len, "alpha")?;
        let b = partition(beta, beta_len, "beta")?;
        let set = lrhorn::enumerate_p(&a, &b)?;
        *slot = Box::into_raw(Box::new(LrhornCandidateSet(set)));
        Ok(())
    })
}

/// # Safety
/// `set` must come from this library; `out_len` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lrhorn_candidate_set_len(
    set: *const LrhornCandidateSet,
    out_len: *mut usize,
) -> LrhornStatus {
    guard(|| {
        *out(out_len, "out_len")? = handle(set, "set")?.0.members.len();
        Ok(())
    })
}

/// Copies member `index` into `buf` (capacity `cap` parts) and stores its
/// length in `out_len`. When `cap` is too small nothing is copied, the
/// required length is still stored and the call fails with
/// `LRHORN_STATUS_INVALID_ARGUMENT`.
///
/// # Safety
/// `set` must come from this library; `buf` must hold `cap` elements (or be
/// NULL with `cap` 0); `out_len` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lrhorn_candidate_set_member(
    set: *const LrhornCandidateSet,
    index: usize,
    buf: *mut u64,
    cap: usize,
    out_len: *mut usize,
) -> LrhornStatus {
    guard(|| {
        let len_slot = out(out_len, "out_len")?;
        let members = &handle(set, "set")?.0.members;
        let m = members
            .get(index)
            .ok_or_else(|| invalid(format!("index {index} out of range 0..{}", members.len())))?;
        let parts = m.parts();
        *len_slot = parts.len();
        if parts.len() > cap {
            return Err(invalid(format!(
                "buffer holds {cap} parts, member needs {}",
                parts.len()
            )));
        }
        if !parts.is_empty() {
            if buf.is_null() {
                return Err(null("buf"));
            }
            ptr::copy_nonoverlapping(parts.as_ptr(), buf, parts.len());
        }
        Ok(())
    })
}

/// # Safety
/// `set` must be NULL or come from this library and not be freed yet.
#[no_mangle]
pub unsafe extern "C" fn lrhorn_candidate_set_free(set: *mut LrhornCandidateSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}
