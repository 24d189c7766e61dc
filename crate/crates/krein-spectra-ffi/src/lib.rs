//! C interface to krein-spectra.
//!
//! A `KsOperator` handle bundles a model with one self-adjoint extension.
//! Every function returns a `KsStatus`; on failure the message is kept per
//! thread and can be read with `ks_last_error`.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use krein_spectra::models::{Branch, Extension, ModelSpec, SpectralPoint};
use krein_spectra::specfn::{self, SpectralSample};
use krein_spectra::spectrum::first_eigenvalues;
use krein_spectra::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    NumericalFailure = 3,
    BufferTooSmall = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KsModelKind {
    Oscillator = 0,
    Interval = 1,
    Dirac = 2,
    AharonovBohm = 3,
    Susy = 4,
}

/// A spectral function value with its truncation bound.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KsSample {
    pub value: f64,
    pub bound: f64,
    pub terms: usize,
}

impl From<SpectralSample> for KsSample {
    fn from(s: SpectralSample) -> Self {
        KsSample { value: s.value, bound: s.truncation_error_bound, terms: s.terms_used }
    }
}

/// Opaque operator handle.
pub struct KsOperator {
    model: ModelSpec,
    ext: Extension,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> KsStatus {
    set_error(e.to_string());
    if e.is_validation() {
        KsStatus::InvalidInput
    } else {
        KsStatus::NumericalFailure
    }
}

fn guard(f: impl FnOnce() -> Result<(), KsStatus>) -> KsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => KsStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("panic inside krein-spectra".into());
            KsStatus::Panic
        }
    }
}

fn lift<T>(r: krein_spectra::Result<T>) -> Result<T, KsStatus> {
    r.map_err(|e| status_of(&e))
}

unsafe fn operator<'a>(op: *const KsOperator) -> Result<&'a KsOperator, KsStatus> {
    op.as_ref().ok_or_else(|| {
        set_error("null operator handle".into());
        KsStatus::NullPointer
    })
}

fn write_out<T>(out: *mut T, value: T) -> Result<(), KsStatus> {
    if out.is_null() {
        set_error("null output pointer".into());
        return Err(KsStatus::NullPointer);
    }
    unsafe { out.write(value) };
    Ok(())
}

/// Creates an operator. `param` is ν (oscillator, interval), α (Dirac,
/// supercharge) or κ (Aharonov–Bohm). A non-finite `extension` selects the
/// extension at infinity.
///
/// # Safety
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn ks_operator_new(
    kind: KsModelKind,
    param: f64,
    extension: f64,
    out: *mut *mut KsOperator,
) -> KsStatus {
    guard(|| {
        let model = lift(match kind {
            KsModelKind::Oscillator => ModelSpec::oscillator(param),
            KsModelKind::Interval => ModelSpec::interval(param),
            KsModelKind::Dirac => ModelSpec::dirac(param),
            KsModelKind::AharonovBohm => ModelSpec::aharonov_bohm(param),
            KsModelKind::Susy => ModelSpec::susy(param),
        })?;
        let ext = if extension.is_nan() {
            set_error("extension parameter is NaN".into());
            return Err(KsStatus::InvalidInput);
        } else if extension.is_infinite() {
            Extension::Infinity
        } else {
            Extension::Finite(extension)
        };
        write_out(out, Box::into_raw(Box::new(KsOperator { model, ext })))
    })
}

/// Releases a handle from `ks_operator_new`. Null is ignored.
///
/// # Safety
/// `op` must come from `ks_operator_new` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ks_operator_free(op: *mut KsOperator) {
    if !op.is_null() {
        drop(Box::from_raw(op));
    }
}

/// Writes the first `count` eigenvalues of the positive (`negative` = 0) or
/// negative branch into `buffer`, which must hold `capacity` values.
///
/// # Safety
/// `op` must be a live handle and `buffer` valid for `capacity` writes.
#[no_mangle]
pub unsafe extern "C" fn ks_eigenvalues(
    op: *const KsOperator,
    negative: bool,
    count: usize,
    buffer: *mut f64,
    capacity: usize,
) -> KsStatus {
    guard(|| {
        let op = operator(op)?;
        if buffer.is_null() {
            set_error("null buffer".into());
            return Err(KsStatus::NullPointer);
        }
        if capacity < count {
            set_error(format!("buffer holds {capacity} values, {count} requested"));
            return Err(KsStatus::BufferTooSmall);
        }
        let branch = if negative { Branch::Negative } else { Branch::Positive };
        let eig = lift(first_eigenvalues(&op.model, op.ext, branch, count))?;
        let out = std::slice::from_raw_parts_mut(buffer, count);
        for (slot, e) in out.iter_mut().zip(&eig) {
            *slot = e.lambda;
        }
        Ok(())
    })
}

/// Heat trace at `t`.
///
/// # Safety
/// `op` must be a live handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn ks_heat_trace(op: *const KsOperator, t: f64, tol: f64, out: *mut KsSample) -> KsStatus {
    guard(|| {
        let op = operator(op)?;
        let s = lift(specfn::heat_trace(&op.model, op.ext, t, tol))?;
        write_out(out, s.into())
    })
}

/// Zeta function at `s`. `order` = 0 sums the spectrum directly; a positive
/// order uses the continued form where available.
///
/// # Safety
/// `op` must be a live handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn ks_zeta(op: *const KsOperator, s: f64, order: usize, tol: f64, out: *mut KsSample) -> KsStatus {
    guard(|| {
        let op = operator(op)?;
        let r = if order == 0 {
            specfn::zeta_sum(&op.model, op.ext, s, tol)
        } else {
            specfn::zeta_continued(&op.model, op.ext, s, order)
        };
        write_out(out, lift(r)?.into())
    })
}

/// Eta function at `s` (Dirac and supercharge).
///
/// # Safety
/// `op` must be a live handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn ks_eta(op: *const KsOperator, s: f64, out: *mut KsSample) -> KsStatus {
    guard(|| {
        let op = operator(op)?;
        write_out(out, lift(specfn::eta(&op.model, op.ext, s))?.into())
    })
}

/// Resolvent trace by spectral summation at `x`, on the imaginary axis when
/// `imaginary` is set.
///
/// # Safety
/// `op` must be a live handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn ks_resolvent_trace(
    op: *const KsOperator,
    x: f64,
    imaginary: bool,
    tol: f64,
    out: *mut KsSample,
) -> KsStatus {
    guard(|| {
        let op = operator(op)?;
        let p = if imaginary { SpectralPoint::Imaginary(x) } else { SpectralPoint::Real(x) };
        write_out(out, lift(specfn::resolvent_trace_sum(&op.model, op.ext, p, tol))?.into())
    })
}

/// Message of the last failure on this thread, valid until the next call
/// on the same thread. Never null.
#[no_mangle]
pub extern "C" fn ks_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
