use std::ffi::CStr;
use std::ptr;

use krein_spectra_ffi::*;

fn new_op(kind: KsModelKind, param: f64, ext: f64) -> *mut KsOperator {
    let mut op = ptr::null_mut();
    let status = unsafe { ks_operator_new(kind, param, ext, &mut op) };
    assert_eq!(status, KsStatus::Ok);
    assert!(!op.is_null());
    op
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(ks_last_error()) }.to_string_lossy().into_owned()
}

#[test]
fn oscillator_eigenvalues_at_infinity() {
    let op = new_op(KsModelKind::Oscillator, 0.5, f64::INFINITY);
    let mut buf = [0.0; 5];
    let status = unsafe { ks_eigenvalues(op, false, 5, buf.as_mut_ptr(), buf.len()) };
    assert_eq!(status, KsStatus::Ok);
    for (n, v) in buf.iter().enumerate() {
        assert!((v - 4.0 * (n as f64 + 0.75)).abs() < 1e-12, "{n}: {v}");
    }
    unsafe { ks_operator_free(op) };
}

#[test]
fn invalid_parameter_reports_input_error() {
    let mut op = ptr::null_mut();
    let status = unsafe { ks_operator_new(KsModelKind::AharonovBohm, 0.7, 0.0, &mut op) };
    assert_eq!(status, KsStatus::InvalidInput);
    assert!(op.is_null());
    assert!(last_error().contains("kappa"));
}

#[test]
fn nan_extension_rejected() {
    let mut op = ptr::null_mut();
    let status = unsafe { ks_operator_new(KsModelKind::Interval, 0.3, f64::NAN, &mut op) };
    assert_eq!(status, KsStatus::InvalidInput);
}

#[test]
fn null_handles_and_small_buffers() {
    let mut sample = KsSample { value: 0.0, bound: 0.0, terms: 0 };
    assert_eq!(unsafe { ks_heat_trace(ptr::null(), 1.0, 1e-10, &mut sample) }, KsStatus::NullPointer);
    let op = new_op(KsModelKind::Interval, 0.3, 1.0);
    let mut buf = [0.0; 2];
    assert_eq!(unsafe { ks_eigenvalues(op, false, 3, buf.as_mut_ptr(), 2) }, KsStatus::BufferTooSmall);
    assert_eq!(unsafe { ks_heat_trace(op, 1.0, 1e-10, ptr::null_mut()) }, KsStatus::NullPointer);
    unsafe { ks_operator_free(op) };
    unsafe { ks_operator_free(ptr::null_mut()) };
}

#[test]
fn ab_zeta_at_zero_via_hurwitz() {
    let op = new_op(KsModelKind::AharonovBohm, 0.25, 0.0);
    let mut sample = KsSample { value: 0.0, bound: 0.0, terms: 0 };
    assert_eq!(unsafe { ks_zeta(op, 0.0, 1, 1e-10, &mut sample) }, KsStatus::Ok);
    assert!((sample.value - 0.25).abs() < 1e-15);
    unsafe { ks_operator_free(op) };
}

#[test]
fn divergent_zeta_is_input_error() {
    let op = new_op(KsModelKind::Interval, 0.3, f64::INFINITY);
    let mut sample = KsSample { value: 0.0, bound: 0.0, terms: 0 };
    assert_eq!(unsafe { ks_zeta(op, 0.2, 0, 1e-10, &mut sample) }, KsStatus::InvalidInput);
    unsafe { ks_operator_free(op) };
}

#[test]
fn symmetric_dirac_eta_vanishes() {
    let op = new_op(KsModelKind::Dirac, 0.1, f64::INFINITY);
    let mut sample = KsSample { value: 1.0, bound: 0.0, terms: 0 };
    assert_eq!(unsafe { ks_eta(op, 2.0, &mut sample) }, KsStatus::Ok);
    assert_eq!(sample.value, 0.0);
    unsafe { ks_operator_free(op) };
}

#[test]
fn interval_resolvent_matches_bessel_ratio() {
    // Σ 1/(j²_{1/2,n} − μ²) = J_{3/2}(μ)/(2μ J_{1/2}(μ)) = (1/μ² − cot μ/μ)/2
    let op = new_op(KsModelKind::Interval, 0.5, f64::INFINITY);
    let mut sample = KsSample { value: 0.0, bound: 0.0, terms: 0 };
    let mu: f64 = 1.3;
    assert_eq!(unsafe { ks_resolvent_trace(op, mu, false, 1e-11, &mut sample) }, KsStatus::Ok);
    let exact = 0.5 * (1.0 / (mu * mu) - 1.0 / (mu * mu.tan()));
    assert!((sample.value - exact).abs() < 1e-9, "{} vs {exact}", sample.value);
    unsafe { ks_operator_free(op) };
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/krein_spectra.h");
    for name in [
        "ks_operator_new",
        "ks_operator_free",
        "ks_eigenvalues",
        "ks_heat_trace",
        "ks_zeta",
        "ks_eta",
        "ks_resolvent_trace",
        "ks_last_error",
        "typedef struct KsOperator KsOperator",
        "KS_STATUS_BUFFER_TOO_SMALL = 4",
    ] {
        assert!(header.contains(name), "missing {name}");
    }
}
