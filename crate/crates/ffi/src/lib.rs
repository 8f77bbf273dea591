//! C ABI over the `bipan` crate.
//!
//! Digraphs cross the boundary as opaque `BipanDigraph` handles that must be
//! released with `bipan_digraph_free`. Every fallible function returns a
//! `BipanStatus`; on failure `bipan_last_error` describes the problem for the
//! calling thread. Strings returned by the library are freed with
//! `bipan_string_free`. Vertices are reported as indices: `x_i = i` and
//! `y_i = a + i` for bipartite digraphs, `v_i = i` otherwise.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bipan::conditions::{check_bk, Theorem};
use bipan::cycles::{cycle_spectrum, find_cycle_of_length};
use bipan::digraph::Digraph;
use bipan::error::{EngineError, GraphError};
use bipan::families::{generate, FamilyName, FamilySpec};
use bipan::format::{parse, serialize};
use bipan::random::random_bipartite;
use bipan::verify::{iso_to_d8, verify_theorem, Outcome};

/// Opaque digraph handle.
pub struct BipanDigraph(Digraph);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BipanStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    NotBipartite = 5,
    TooLarge = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BipanOutcome {
    Confirmed = 0,
    HypothesesNotMet = 1,
    Violation = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Fail(BipanStatus, String);

impl From<GraphError> for Fail {
    fn from(e: GraphError) -> Self {
        let status = match e {
            GraphError::NotBipartite => BipanStatus::NotBipartite,
            GraphError::TooLarge { .. } => BipanStatus::TooLarge,
            GraphError::BadProbability(_) | GraphError::TooSmall { .. } => BipanStatus::InvalidArgument,
            _ => BipanStatus::ParseError,
        };
        Fail(status, e.to_string())
    }
}

impl From<EngineError> for Fail {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::Graph(g) => g.into(),
            EngineError::TooLarge { .. } => Fail(BipanStatus::TooLarge, e.to_string()),
            other => Fail(BipanStatus::InvalidArgument, other.to_string()),
        }
    }
}

fn invalid(msg: impl Into<String>) -> Fail {
    Fail(BipanStatus::InvalidArgument, msg.into())
}

/// Runs `f`, converting errors and panics into a status plus thread-local message.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> BipanStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            BipanStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            BipanStatus::Panic
        }
    }
}

unsafe fn digraph<'a>(d: *const BipanDigraph) -> Result<&'a Digraph, Fail> {
    d.as_ref().map(|h| &h.0).ok_or(Fail(BipanStatus::NullPointer, "null digraph handle".into()))
}

unsafe fn out_ref<'a, T>(p: *mut T, name: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| Fail(BipanStatus::NullPointer, format!("null output pointer `{name}`")))
}

unsafe fn text<'a>(s: *const c_char, name: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail(BipanStatus::NullPointer, format!("null string `{name}`")));
    }
    CStr::from_ptr(s).to_str().map_err(|e| Fail(BipanStatus::InvalidUtf8, format!("`{name}`: {e}")))
}

fn handle(d: Digraph) -> *mut BipanDigraph {
    Box::into_raw(Box::new(BipanDigraph(d)))
}

fn c_string(s: String) -> Result<*mut c_char, Fail> {
    CString::new(s).map(CString::into_raw).map_err(|e| invalid(e.to_string()))
}

/// Message for the last failed call on this thread, or NULL. Valid until the
/// next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn bipan_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses the canonical text format.
#[no_mangle]
pub unsafe extern "C" fn bipan_digraph_parse(text_in: *const c_char, out: *mut *mut BipanDigraph) -> BipanStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = handle(parse(text(text_in, "text")?)?);
        Ok(())
    })
}

/// Builds a family member. `param` is `a` for `cycle` and `complete`, `m`
/// for the H-families, and ignored otherwise; `flag` selects `both_arcs`
/// for `h2m` and `out_orientation` for `hm-m1-1`.
#[no_mangle]
pub unsafe extern "C" fn bipan_digraph_family(
    name: *const c_char,
    param: u32,
    flag: bool,
    out: *mut *mut BipanDigraph,
) -> BipanStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let n = param as usize;
        let spec = match text(name, "name")?.parse::<FamilyName>().map_err(|e| invalid(e.to_string()))? {
            FamilyName::D8 => FamilySpec::D8,
            FamilyName::D6 => FamilySpec::D6,
            FamilyName::D6Prime => FamilySpec::D6Prime,
            FamilyName::Cycle => FamilySpec::DirectedCycle { a: n },
            FamilyName::Complete => FamilySpec::CompleteBipartite { a: n },
            FamilyName::Hmm => FamilySpec::Hmm { m: n },
            FamilyName::HmM1One => FamilySpec::HmM1One { m: n, out_orientation: flag },
            FamilyName::H2m => FamilySpec::H2m { m: n, both_arcs: flag },
        };
        *out = handle(generate(spec).map_err(|e| invalid(e.to_string()))?);
        Ok(())
    })
}

/// Seeded random balanced bipartite digraph; identical to
/// `bipan gen --family random`.
#[no_mangle]
pub unsafe extern "C" fn bipan_digraph_random(a: u32, p: f64, seed: u64, out: *mut *mut BipanDigraph) -> BipanStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = handle(random_bipartite(a as usize, p, seed)?);
        Ok(())
    })
}

/// Releases a handle; NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn bipan_digraph_free(d: *mut BipanDigraph) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Number of vertices, or 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn bipan_digraph_order(d: *const BipanDigraph) -> usize {
    d.as_ref().map_or(0, |h| h.0.order())
}

/// Number of arcs, or 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn bipan_digraph_arc_count(d: *const BipanDigraph) -> usize {
    d.as_ref().map_or(0, |h| h.0.arc_count())
}

/// Canonical serialization; free the result with `bipan_string_free`.
#[no_mangle]
pub unsafe extern "C" fn bipan_digraph_serialize(d: *const BipanDigraph, out: *mut *mut c_char) -> BipanStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = c_string(serialize(digraph(d)?))?;
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn bipan_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Condition `B_k`. `pairs_checked` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn bipan_check_bk(
    d: *const BipanDigraph,
    k: i64,
    holds: *mut bool,
    pairs_checked: *mut usize,
) -> BipanStatus {
    guard(|| {
        let holds = out_ref(holds, "holds")?;
        let report = check_bk(digraph(d)?, k)?;
        *holds = report.holds;
        if let Some(p) = pairs_checked.as_mut() {
            *p = report.pairs_checked;
        }
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn bipan_is_strong(d: *const BipanDigraph, strong: *mut bool) -> BipanStatus {
    guard(|| {
        *out_ref(strong, "strong")? = digraph(d)?.is_strong();
        Ok(())
    })
}

/// Lexicographically smallest cycle of length `m`. On success `*found`
/// tells whether one exists; its vertices are written to `buf`, which must
/// hold at least `m` entries.
#[no_mangle]
pub unsafe extern "C" fn bipan_find_cycle(
    d: *const BipanDigraph,
    m: usize,
    buf: *mut u32,
    buf_len: usize,
    found: *mut bool,
) -> BipanStatus {
    guard(|| {
        let found = out_ref(found, "found")?;
        let g = digraph(d)?;
        let cycle = find_cycle_of_length(g, m)?;
        *found = cycle.is_some();
        if let Some(c) = cycle {
            if buf.is_null() || buf_len < c.len() {
                *found = false;
                return Err(Fail(BipanStatus::BufferTooSmall, format!("buffer holds {buf_len}, cycle has {}", c.len())));
            }
            let out = std::slice::from_raw_parts_mut(buf, c.len());
            for (slot, &v) in out.iter_mut().zip(c.vertices()) {
                *slot = v as u32;
            }
        }
        Ok(())
    })
}

/// Achievable cycle lengths as a bitmask: bit `m` is set when a cycle of
/// length `m` exists; a 64-cycle cannot be represented. `max_n` bounds the
/// order (0 selects the default).
#[no_mangle]
pub unsafe extern "C" fn bipan_cycle_spectrum(d: *const BipanDigraph, max_n: usize, mask: *mut u64) -> BipanStatus {
    guard(|| {
        let mask = out_ref(mask, "mask")?;
        let bound = if max_n == 0 { bipan::cycles::DEFAULT_MAX_N } else { max_n };
        let spectrum = cycle_spectrum(digraph(d)?, bound)?;
        *mask = spectrum.lengths().iter().filter(|&&m| m < 64).fold(0, |acc, &m| acc | 1u64 << m);
        Ok(())
    })
}

/// Evaluates theorem `"1.7"`, `"1.8"`, `"1.9"` or `"1.10"`. `report`, if not
/// NULL, receives the key-value certificate (free with `bipan_string_free`).
#[no_mangle]
pub unsafe extern "C" fn bipan_certify(
    d: *const BipanDigraph,
    theorem: *const c_char,
    outcome: *mut BipanOutcome,
    report: *mut *mut c_char,
) -> BipanStatus {
    guard(|| {
        let outcome = out_ref(outcome, "outcome")?;
        let g = digraph(d)?;
        let t: Theorem = text(theorem, "theorem")?.parse().map_err(invalid)?;
        let verdict = verify_theorem(g, t).ok_or_else(|| invalid(format!("theorem {t} has no verdict")))?;
        *outcome = match verdict.outcome() {
            Outcome::HypothesesNotMet => BipanOutcome::HypothesesNotMet,
            Outcome::Confirmed => BipanOutcome::Confirmed,
            Outcome::Violation => BipanOutcome::Violation,
        };
        if let Some(r) = report.as_mut() {
            *r = c_string(verdict.render(g))?;
        }
        Ok(())
    })
}

/// Isomorphism with D(8). When one exists, `mapping` (8 entries, may be
/// NULL) receives for each vertex of `d` its image in D(8).
#[no_mangle]
pub unsafe extern "C" fn bipan_iso_d8(d: *const BipanDigraph, isomorphic: *mut bool, mapping: *mut u32) -> BipanStatus {
    guard(|| {
        let isomorphic = out_ref(isomorphic, "isomorphic")?;
        let w = iso_to_d8(digraph(d)?);
        *isomorphic = w.is_some();
        if let (Some(w), false) = (w, mapping.is_null()) {
            let out = std::slice::from_raw_parts_mut(mapping, 8);
            for (slot, &v) in out.iter_mut().zip(w.mapping.iter()) {
                *slot = v as u32;
            }
        }
        Ok(())
    })
}
