//! C interface. Texts are opaque handles created by [`gapped_text_new`]
//! and released with [`gapped_text_free`]. Every fallible call returns a
//! [`GappedStatus`]; on failure [`gapped_last_error`] describes the cause.
//! Positions are 1-based and witness buffers use -1 for "none".

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use gapped::alpha::{self, Alpha};
use gapped::bounded::{longest_bounded, lpf_bounded, lprf_bounded};
use gapped::dbf::{build_dbf, BasicFactorDict};
use gapped::periodicity::compute_runs;
use gapped::positional::{lpf_positional, lprf_positional};
use gapped::{Error, GapArray, Kind, Text, TextIndex};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GappedStatus {
    Ok = 0,
    NullPointer = 1,
    Input = 2,
    Range = 3,
    Param = 4,
    Plan = 5,
    Precondition = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

/// Values accepted for `kind` arguments.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GappedKind {
    Repeat = 0,
    Palindrome = 1,
}

/// A gapped structure; `left_start` is 1-based.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GappedStructure {
    pub left_start: usize,
    pub arm_len: usize,
    pub gap_len: usize,
}

/// A maximal run `w[start..=end]` with smallest period `period`.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GappedRun {
    pub start: usize,
    pub end: usize,
    pub period: usize,
}

/// Opaque text with its index.
pub struct GappedText {
    idx: TextIndex,
    dbf: std::sync::OnceLock<BasicFactorDict>,
}

impl GappedText {
    fn dbf(&self) -> &BasicFactorDict {
        self.dbf.get_or_init(|| build_dbf(&self.idx))
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> GappedStatus {
    match e {
        Error::Input(_) => GappedStatus::Input,
        Error::Range(_) => GappedStatus::Range,
        Error::Param(_) => GappedStatus::Param,
        Error::Plan(_) => GappedStatus::Plan,
        Error::Precondition(_) => GappedStatus::Precondition,
    }
}

enum Fail {
    Null(&'static str),
    Lib(Error),
    Buffer(usize, usize),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> GappedStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            GappedStatus::Ok
        }
        Ok(Err(Fail::Null(what))) => {
            set_error(&format!("null pointer: {what}"));
            GappedStatus::NullPointer
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Ok(Err(Fail::Buffer(have, need))) => {
            set_error(&format!("buffer holds {have} entries, {need} needed"));
            GappedStatus::BufferTooSmall
        }
        Err(_) => {
            set_error("internal panic");
            GappedStatus::Panic
        }
    }
}

unsafe fn text_ref<'a>(t: *const GappedText) -> Result<&'a GappedText, Fail> {
    t.as_ref().ok_or(Fail::Null("text"))
}

fn kind_of(kind: u32) -> Result<Kind, Fail> {
    match kind {
        0 => Ok(Kind::Repeat),
        1 => Ok(Kind::Palindrome),
        _ => Err(Error::Param(format!("unknown kind {kind}")).into()),
    }
}

unsafe fn write_array(a: &GapArray, values: *mut usize, witness: *mut i64, cap: usize) -> Result<(), Fail> {
    if values.is_null() {
        return Err(Fail::Null("values"));
    }
    if cap < a.len() {
        return Err(Fail::Buffer(cap, a.len()));
    }
    ptr::copy_nonoverlapping(a.values.as_ptr(), values, a.len());
    if !witness.is_null() {
        for (k, w) in a.witness.iter().enumerate() {
            *witness.add(k) = w.map_or(-1, |x| x as i64);
        }
    }
    Ok(())
}

/// Builds a text over the bytes `data[0..len]`. The handle must be released
/// with `gapped_text_free`.
#[no_mangle]
pub unsafe extern "C" fn gapped_text_new(data: *const u8, len: usize, out: *mut *mut GappedText) -> GappedStatus {
    guard(|| {
        if data.is_null() {
            return Err(Fail::Null("data"));
        }
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        let text = Text::from_bytes(std::slice::from_raw_parts(data, len))?;
        let handle = GappedText { idx: TextIndex::new(&text), dbf: Default::default() };
        *out = Box::into_raw(Box::new(handle));
        Ok(())
    })
}

/// Releases a handle; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn gapped_text_free(text: *mut GappedText) {
    if !text.is_null() {
        drop(Box::from_raw(text));
    }
}

/// Length of the text, 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn gapped_text_len(text: *const GappedText) -> usize {
    text.as_ref().map_or(0, |t| t.idx.len())
}

/// Message for the last failed call on this thread; empty after success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn gapped_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

unsafe fn query(
    text: *const GappedText,
    out: *mut usize,
    f: impl FnOnce(&TextIndex) -> gapped::Result<usize>,
) -> GappedStatus {
    guard(|| {
        let t = text_ref(text)?;
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        *out = f(&t.idx)?;
        Ok(())
    })
}

/// Longest common prefix of the suffixes at `i` and `j`.
#[no_mangle]
pub unsafe extern "C" fn gapped_lcp(text: *const GappedText, i: usize, j: usize, out: *mut usize) -> GappedStatus {
    query(text, out, |idx| idx.lcp_suffixes(i, j))
}

/// Longest common suffix of the prefixes ending at `i` and `j`.
#[no_mangle]
pub unsafe extern "C" fn gapped_lcs(text: *const GappedText, i: usize, j: usize, out: *mut usize) -> GappedStatus {
    query(text, out, |idx| idx.lcs_prefixes(i, j))
}

/// Longest common prefix of the suffix at `i` and the reversed prefix
/// ending at `j`.
#[no_mangle]
pub unsafe extern "C" fn gapped_lcp_rev(text: *const GappedText, i: usize, j: usize, out: *mut usize) -> GappedStatus {
    query(text, out, |idx| idx.lcp_rev(i, j))
}

unsafe fn array(
    text: *const GappedText,
    values: *mut usize,
    witness: *mut i64,
    cap: usize,
    f: impl FnOnce(&GappedText) -> gapped::Result<GapArray>,
) -> GappedStatus {
    guard(|| {
        let t = text_ref(text)?;
        let a = f(t)?;
        write_array(&a, values, witness, cap)
    })
}

unsafe fn gaps_slice<'a>(gaps: *const usize, n: usize) -> gapped::Result<&'a [usize]> {
    if gaps.is_null() {
        return Err(Error::Param("gap function is null".into()));
    }
    Ok(std::slice::from_raw_parts(gaps, n))
}

/// Gapped palindromes with gap in `[g, big_g)`. `values` must hold n
/// entries; `witness` (n entries, end of the left arm) may be null.
#[no_mangle]
pub unsafe extern "C" fn gapped_lprf_bounded(
    text: *const GappedText,
    g: usize,
    big_g: usize,
    values: *mut usize,
    witness: *mut i64,
    cap: usize,
) -> GappedStatus {
    array(text, values, witness, cap, |t| lprf_bounded(&t.idx, g, big_g))
}

/// Gapped repeats with gap in `[g, big_g)`; witnesses are left-arm starts.
#[no_mangle]
pub unsafe extern "C" fn gapped_lpf_bounded(
    text: *const GappedText,
    g: usize,
    big_g: usize,
    values: *mut usize,
    witness: *mut i64,
    cap: usize,
) -> GappedStatus {
    array(text, values, witness, cap, |t| lpf_bounded(&t.idx, t.dbf(), g, big_g))
}

/// Gapped palindromes with gap at least `gaps[i-1]`; `gaps` holds n values.
#[no_mangle]
pub unsafe extern "C" fn gapped_lprf_positional(
    text: *const GappedText,
    gaps: *const usize,
    values: *mut usize,
    witness: *mut i64,
    cap: usize,
) -> GappedStatus {
    array(text, values, witness, cap, |t| lprf_positional(&t.idx, gaps_slice(gaps, t.idx.len())?))
}

/// Gapped repeats with gap at least `gaps[i-1]`; `gaps` holds n values.
#[no_mangle]
pub unsafe extern "C" fn gapped_lpf_positional(
    text: *const GappedText,
    gaps: *const usize,
    values: *mut usize,
    witness: *mut i64,
    cap: usize,
) -> GappedStatus {
    array(text, values, witness, cap, |t| lpf_positional(&t.idx, gaps_slice(gaps, t.idx.len())?))
}

/// α-gapped palindromes with `α = p / q`.
#[no_mangle]
pub unsafe extern "C" fn gapped_lpal_alpha(
    text: *const GappedText,
    p: u64,
    q: u64,
    values: *mut usize,
    witness: *mut i64,
    cap: usize,
) -> GappedStatus {
    array(text, values, witness, cap, |t| alpha::lpal_alpha(&t.idx, Alpha::new(p, q)?))
}

/// α-gapped repeats with `α = p / q`.
#[no_mangle]
pub unsafe extern "C" fn gapped_lrep_alpha(
    text: *const GappedText,
    p: u64,
    q: u64,
    values: *mut usize,
    witness: *mut i64,
    cap: usize,
) -> GappedStatus {
    array(text, values, witness, cap, |t| alpha::lrep_alpha(&t.idx, Alpha::new(p, q)?))
}

unsafe fn longest(
    text: *const GappedText,
    kind: u32,
    out: *mut GappedStructure,
    found: *mut bool,
    f: impl FnOnce(&GappedText, Kind) -> gapped::Result<Option<gapped::GappedStructure>>,
) -> GappedStatus {
    guard(|| {
        let t = text_ref(text)?;
        if out.is_null() || found.is_null() {
            return Err(Fail::Null("out"));
        }
        let s = f(t, kind_of(kind)?)?;
        *found = s.is_some();
        *out = s.map_or_else(GappedStructure::default, |s| GappedStructure {
            left_start: s.left_start,
            arm_len: s.arm_len,
            gap_len: s.gap_len,
        });
        Ok(())
    })
}

/// A longest structure of `kind` (a `GappedKind` value) with gap in
/// `[g, big_g)`. `*found` is false when none exists.
#[no_mangle]
pub unsafe extern "C" fn gapped_longest_bounded(
    text: *const GappedText,
    g: usize,
    big_g: usize,
    kind: u32,
    out: *mut GappedStructure,
    found: *mut bool,
) -> GappedStatus {
    longest(text, kind, out, found, |t, k| longest_bounded(&t.idx, g, big_g, k))
}

/// A longest α-gapped structure of `kind` with `α = p / q`.
#[no_mangle]
pub unsafe extern "C" fn gapped_longest_alpha(
    text: *const GappedText,
    p: u64,
    q: u64,
    kind: u32,
    out: *mut GappedStructure,
    found: *mut bool,
) -> GappedStatus {
    longest(text, kind, out, found, |t, k| alpha::longest_alpha(&t.idx, Alpha::new(p, q)?, k))
}

/// Writes up to `cap` runs to `out` and their total number to `*count`.
/// Returns `BUFFER_TOO_SMALL` when `cap < *count`; `out` may be null when
/// `cap` is 0.
#[no_mangle]
pub unsafe extern "C" fn gapped_runs(
    text: *const GappedText,
    out: *mut GappedRun,
    cap: usize,
    count: *mut usize,
) -> GappedStatus {
    guard(|| {
        let t = text_ref(text)?;
        if count.is_null() {
            return Err(Fail::Null("count"));
        }
        let runs = compute_runs(&t.idx);
        *count = runs.len();
        if cap < runs.len() {
            return Err(Fail::Buffer(cap, runs.len()));
        }
        if out.is_null() && !runs.is_empty() {
            return Err(Fail::Null("out"));
        }
        for (k, r) in runs.iter().enumerate() {
            *out.add(k) = GappedRun { start: r.start, end: r.end, period: r.period };
        }
        Ok(())
    })
}
