//! C ABI for the `uncopy` toolkit.
//!
//! Objects cross the boundary as opaque handles (`UncopyKet`,
//! `UncopyOperator`, `UncopyMachine`) that the caller frees with the matching
//! `*_free` function. Every fallible call returns an [`UncopyStatus`]; on
//! failure a description is available from [`uncopy_last_error`] on the same
//! thread. Strings returned by the library are freed with
//! [`uncopy_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use uncopy::Error;

mod ket;
mod machine;
mod operator;
mod scenario;

pub use ket::*;
pub use machine::*;
pub use operator::*;
pub use scenario::*;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UncopyStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    DimensionMismatch = 3,
    NotNormalized = 4,
    Infeasible = 5,
    CompletionFailed = 6,
    UnknownScenario = 7,
    InvalidConfig = 8,
    Panic = 9,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

pub(crate) fn fail(status: UncopyStatus, msg: impl Into<String>) -> UncopyStatus {
    set_last_error(msg.into());
    status
}

impl From<&Error> for UncopyStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::ShapeMismatch { .. }
            | Error::DimensionMismatch { .. }
            | Error::NotSquare { .. }
            | Error::UnequalFactorDims { .. }
            | Error::FactorIndexOutOfRange { .. } => UncopyStatus::DimensionMismatch,
            Error::NotNormalized { .. }
            | Error::UnnormalizedCoefficients { .. }
            | Error::DegenerateNorm { .. } => UncopyStatus::NotNormalized,
            Error::Infeasible { .. } => UncopyStatus::Infeasible,
            Error::CompletionFailed { .. } => UncopyStatus::CompletionFailed,
            Error::UnknownScenario(_) => UncopyStatus::UnknownScenario,
            Error::InvalidConfig(_) => UncopyStatus::InvalidConfig,
            Error::InvalidFactorDim { .. }
            | Error::EmptyShape
            | Error::EmptyList
            | Error::DegenerateInputs
            | Error::InvalidTarget(_)
            | Error::MalformedSpec(_) => UncopyStatus::InvalidArgument,
        }
    }
}

pub(crate) fn from_error(e: Error) -> UncopyStatus {
    let status = UncopyStatus::from(&e);
    fail(status, e.to_string())
}

/// Runs `body`, mapping errors and panics to a status code.
pub(crate) fn guard(body: impl FnOnce() -> Result<(), UncopyStatus>) -> UncopyStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            UncopyStatus::Ok
        }
        Ok(Err(status)) => status,
        Err(_) => fail(UncopyStatus::Panic, "panic inside uncopy"),
    }
}

pub(crate) trait OrStatus<T> {
    fn or_status(self) -> Result<T, UncopyStatus>;
}

impl<T> OrStatus<T> for uncopy::Result<T> {
    fn or_status(self) -> Result<T, UncopyStatus> {
        self.map_err(from_error)
    }
}

pub(crate) fn non_null<'a, T>(ptr: *const T, what: &str) -> Result<&'a T, UncopyStatus> {
    // SAFETY: callers pass pointers obtained from this library or valid for reads
    unsafe { ptr.as_ref() }.ok_or_else(|| fail(UncopyStatus::NullPointer, format!("{what} is null")))
}

pub(crate) fn out_ptr<'a, T>(ptr: *mut T, what: &str) -> Result<&'a mut T, UncopyStatus> {
    // SAFETY: as for `non_null`, for writes
    unsafe { ptr.as_mut() }.ok_or_else(|| fail(UncopyStatus::NullPointer, format!("{what} is null")))
}

/// Reads `len` elements; a null pointer is accepted only when `len == 0`.
pub(crate) fn slice<'a, T>(ptr: *const T, len: usize, what: &str) -> Result<&'a [T], UncopyStatus> {
    if len == 0 {
        return Ok(&[]);
    }
    if ptr.is_null() {
        return Err(fail(UncopyStatus::NullPointer, format!("{what} is null")));
    }
    // SAFETY: caller guarantees `ptr` is valid for `len` reads
    Ok(unsafe { std::slice::from_raw_parts(ptr, len) })
}

pub(crate) fn slice_mut<'a, T>(ptr: *mut T, len: usize, what: &str) -> Result<&'a mut [T], UncopyStatus> {
    if len == 0 {
        return Ok(&mut []);
    }
    if ptr.is_null() {
        return Err(fail(UncopyStatus::NullPointer, format!("{what} is null")));
    }
    // SAFETY: caller guarantees `ptr` is valid for `len` writes
    Ok(unsafe { std::slice::from_raw_parts_mut(ptr, len) })
}

/// Message for the most recent failed call on this thread, or null. The
/// pointer stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn uncopy_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(std::ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn uncopy_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` must be null or a pointer returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn uncopy_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
