use std::ffi::{CStr, CString};
use std::ptr;

use uncopy_ffi::*;

const S: f64 = std::f64::consts::FRAC_1_SQRT_2;

fn last_error() -> String {
    let p = uncopy_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

#[test]
fn ket_round_trip() {
    let re = [0.6, 0.0];
    let im = [0.0, 0.8];
    let dims = [2usize];
    let mut k = ptr::null_mut();
    unsafe {
        assert_eq!(uncopy_ket_new(re.as_ptr(), im.as_ptr(), 2, dims.as_ptr(), 1, &mut k), UncopyStatus::Ok);
        assert_eq!(uncopy_ket_dim(k), 2);
        assert!((uncopy_ket_norm(k) - 1.0).abs() < 1e-15);
        let (mut r, mut i) = ([0.0; 2], [0.0; 2]);
        assert_eq!(uncopy_ket_amplitudes(k, r.as_mut_ptr(), i.as_mut_ptr(), 2), UncopyStatus::Ok);
        assert_eq!((r, i), (re, im));
        assert_eq!(
            uncopy_ket_amplitudes(k, r.as_mut_ptr(), i.as_mut_ptr(), 1),
            UncopyStatus::DimensionMismatch
        );
        uncopy_ket_free(k);
    }
}

#[test]
fn inner_tensor_and_fidelity() {
    let dims = [2usize];
    let (mut h, mut v, mut hv) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
    unsafe {
        uncopy_ket_basis(dims.as_ptr(), 1, 0, &mut h);
        uncopy_ket_basis(dims.as_ptr(), 1, 1, &mut v);
        let parts = [h as *const UncopyKet, v as *const UncopyKet];
        assert_eq!(uncopy_ket_tensor(parts.as_ptr(), 2, &mut hv), UncopyStatus::Ok);
        assert_eq!(uncopy_ket_dim(hv), 4);

        let (mut re, mut im) = (1.0, 1.0);
        assert_eq!(uncopy_ket_inner(h, v, &mut re, &mut im), UncopyStatus::Ok);
        assert_eq!((re, im), (0.0, 0.0));

        let mut f = -1.0;
        assert_eq!(uncopy_fidelity(h, h, &mut f), UncopyStatus::Ok);
        assert_eq!(f, 1.0);
        assert_eq!(uncopy_fidelity(h, hv, &mut f), UncopyStatus::DimensionMismatch);
        assert!(!last_error().is_empty());

        for k in [h, v, hv] {
            uncopy_ket_free(k);
        }
    }
}

#[test]
fn null_pointers_are_reported() {
    unsafe {
        let mut f = 0.0;
        assert_eq!(uncopy_fidelity(ptr::null(), ptr::null(), &mut f), UncopyStatus::NullPointer);
        assert_eq!(last_error(), "ket is null");
        assert_eq!(uncopy_ket_dim(ptr::null()), 0);
        assert!(uncopy_ket_norm(ptr::null()).is_nan());
        uncopy_ket_free(ptr::null_mut());
        uncopy_operator_free(ptr::null_mut());
        uncopy_machine_free(ptr::null_mut());
        uncopy_string_free(ptr::null_mut());
    }
}

#[test]
fn success_clears_last_error() {
    let mut k = ptr::null_mut();
    unsafe {
        assert_eq!(uncopy_ket_haar(0, 1, &mut k), UncopyStatus::InvalidArgument);
        assert_eq!(uncopy_ket_haar(4, 1, &mut k), UncopyStatus::Ok);
        assert!(uncopy_last_error().is_null());
        assert!((uncopy_ket_norm(k) - 1.0).abs() < 1e-12);
        uncopy_ket_free(k);
    }
}

#[test]
fn cnot_copies_basis_states() {
    let (mut g, mut x, mut y) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
    let dims = [2usize, 2];
    unsafe {
        uncopy_operator_cnot(&mut g);
        assert_eq!(uncopy_operator_dim(g), 4);
        uncopy_ket_basis(dims.as_ptr(), 2, 2, &mut x); // |10⟩
        assert_eq!(uncopy_operator_apply(g, x, &mut y), UncopyStatus::Ok);
        let (mut re, mut im) = ([0.0; 4], [0.0; 4]);
        uncopy_ket_amplitudes(y, re.as_mut_ptr(), im.as_mut_ptr(), 4);
        assert_eq!(re, [0.0, 0.0, 0.0, 1.0]);

        let (mut unitary, mut dev) = (false, 1.0);
        uncopy_operator_is_unitary(g, 1e-10, &mut unitary, &mut dev);
        assert!(unitary);
        assert_eq!(dev, 0.0);
        for k in [x, y] {
            uncopy_ket_free(k);
        }
        uncopy_operator_free(g);
    }
}

#[test]
fn operator_entries_and_compose() {
    let dims = [2usize, 2];
    let (mut s, mut ss, mut id) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
    unsafe {
        assert_eq!(uncopy_operator_swap_factors(dims.as_ptr(), 2, 0, 1, &mut s), UncopyStatus::Ok);
        assert_eq!(uncopy_operator_compose(s, s, &mut ss), UncopyStatus::Ok);
        uncopy_operator_identity(dims.as_ptr(), 2, &mut id);
        let (mut a, mut ai, mut b, mut bi) = ([0.0; 16], [0.0; 16], [0.0; 16], [0.0; 16]);
        uncopy_operator_entries(ss, a.as_mut_ptr(), ai.as_mut_ptr(), 16);
        uncopy_operator_entries(id, b.as_mut_ptr(), bi.as_mut_ptr(), 16);
        assert_eq!((a, ai), (b, bi));
        assert_eq!(
            uncopy_operator_swap_factors(dims.as_ptr(), 2, 0, 2, &mut s),
            UncopyStatus::DimensionMismatch
        );
        for op in [s, ss, id] {
            uncopy_operator_free(op);
        }
    }
}

#[test]
fn operator_from_real_matrix() {
    let re = [0.0, 1.0, 1.0, 0.0];
    let dims = [2usize];
    let mut x = ptr::null_mut();
    unsafe {
        assert_eq!(
            uncopy_operator_from_matrix(re.as_ptr(), ptr::null(), 4, dims.as_ptr(), 1, &mut x),
            UncopyStatus::Ok
        );
        let (mut ok, mut dev) = (false, 0.0);
        uncopy_operator_is_unitary(x, 1e-10, &mut ok, &mut dev);
        assert!(ok);
        assert_eq!(
            uncopy_operator_from_matrix(re.as_ptr(), ptr::null(), 3, dims.as_ptr(), 1, &mut x),
            UncopyStatus::DimensionMismatch
        );
        uncopy_operator_free(x);
    }
}

#[test]
fn rotation_validates_target_and_coefficients() {
    let mut r = ptr::null_mut();
    unsafe {
        assert_eq!(uncopy_operator_rotation_to_basis(S, 0.0, S, 0.0, 2, &mut r), UncopyStatus::InvalidArgument);
        assert_eq!(uncopy_operator_rotation_to_basis(1.0, 0.0, 1.0, 0.0, 0, &mut r), UncopyStatus::NotNormalized);
        assert_eq!(uncopy_operator_rotation_to_basis(S, 0.0, S, 0.0, 1, &mut r), UncopyStatus::Ok);
        uncopy_operator_free(r);
    }
}

#[test]
fn counterexample_machine_report() {
    let mut m = ptr::null_mut();
    unsafe {
        assert_eq!(uncopy_machine_counterexample(0, 0, &mut m), UncopyStatus::Ok);
        let mut r = std::mem::zeroed::<UncopyMachineReport>();
        assert_eq!(uncopy_machine_report(m, &mut r), UncopyStatus::Ok);
        assert!(r.feasible);
        assert!(r.ancilla_overlap_re.abs() < 1e-15 && r.ancilla_overlap_im.abs() < 1e-15);
        assert!(r.unitarity_deviation < 1e-10);
        assert!(r.constraint_residual < 1e-10);
        assert!(r.uncopy_residual < 1e-9);
        assert!(!r.is_swap);
        assert!(r.swap_deviation > 1.0);

        let mut residual = 1.0;
        assert_eq!(uncopy_machine_verify_uncopy(m, 0.6, 0.0, 0.0, 0.8, &mut residual), UncopyStatus::Ok);
        assert!(residual < 1e-9);
        assert_eq!(
            uncopy_machine_verify_uncopy(m, 1.0, 0.0, 1.0, 0.0, &mut residual),
            UncopyStatus::NotNormalized
        );

        let mut op = ptr::null_mut();
        uncopy_machine_operator(m, &mut op);
        assert_eq!(uncopy_operator_dim(op), 8);
        uncopy_operator_free(op);
        uncopy_machine_free(m);

        assert_eq!(uncopy_machine_counterexample(2, 0, &mut m), UncopyStatus::InvalidArgument);
        assert_eq!(uncopy_machine_counterexample(1, 2, &mut m), UncopyStatus::Ok);
        let mut op = ptr::null_mut();
        uncopy_machine_operator(m, &mut op);
        assert_eq!(uncopy_operator_dim(op), 32);
        uncopy_operator_free(op);
        uncopy_machine_free(m);
    }
}

#[test]
fn swap_machine_is_swap() {
    let mut m = ptr::null_mut();
    unsafe {
        assert_eq!(uncopy_machine_swap(1, &mut m), UncopyStatus::Ok);
        let mut r = std::mem::zeroed::<UncopyMachineReport>();
        uncopy_machine_report(m, &mut r);
        assert!(r.is_swap && r.feasible);
        assert_eq!(r.swap_deviation, 0.0);
        uncopy_machine_free(m);
    }
}

#[test]
fn cnot_trials_and_mcnot() {
    unsafe {
        let mut f = 0.0;
        assert_eq!(uncopy_cnot_trial(S, 0.0, S, 0.0, UncopyCopyMode::Copy, &mut f), UncopyStatus::Ok);
        // |ᾱα² + β̄β²|² with α = β = 1/√2
        assert!((f - 0.5).abs() < 1e-15);
        uncopy_cnot_trial(0.0, 0.0, 1.0, 0.0, UncopyCopyMode::Delete, &mut f);
        assert!((f - 1.0).abs() < 1e-15);

        let mut op = ptr::null_mut();
        assert_eq!(uncopy_mcnot_circuit(0.6, 0.0, 0.0, 0.8, UncopyCopyMode::Copy, &mut op), UncopyStatus::Ok);
        let (mut ok, mut dev) = (false, 1.0);
        uncopy_operator_is_unitary(op, 1e-12, &mut ok, &mut dev);
        assert!(ok);
        uncopy_operator_free(op);
    }
}

#[test]
fn scenario_json() {
    let cfg = uncopy_config_default();
    assert_eq!(cfg.trials, 100);
    assert_eq!(cfg.tolerance, 1e-10);
    let name = CString::new("counterexample").unwrap();
    let (mut json, mut passed) = (ptr::null_mut(), false);
    unsafe {
        assert_eq!(uncopy_run_scenario_json(name.as_ptr(), &cfg, &mut json, &mut passed), UncopyStatus::Ok);
        assert!(passed);
        let text = CStr::from_ptr(json).to_str().unwrap();
        let v: serde_json::Value = serde_json::from_str(text).unwrap();
        assert_eq!(v["reports"][0]["scenario"], "counterexample");
        assert_eq!(v["reports"][0]["verdict"], "pass");
        uncopy_string_free(json);

        let bogus = CString::new("nope").unwrap();
        assert_eq!(
            uncopy_run_scenario_json(bogus.as_ptr(), &cfg, &mut json, &mut passed),
            UncopyStatus::UnknownScenario
        );
    }
}

#[test]
fn run_all_json_and_bad_config() {
    let mut cfg = uncopy_config_default();
    cfg.trials = 10;
    let (mut json, mut code) = (ptr::null_mut(), -1);
    unsafe {
        assert_eq!(uncopy_run_all_json(&cfg, &mut json, &mut code), UncopyStatus::Ok);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(CStr::from_ptr(json).to_str().unwrap()).unwrap();
        assert_eq!(v["reports"].as_array().unwrap().len(), 8);
        uncopy_string_free(json);

        cfg.alpha_re = 2.0;
        assert_eq!(uncopy_run_all_json(&cfg, &mut json, &mut code), UncopyStatus::InvalidConfig);
    }
}

#[test]
fn version_matches_crate() {
    let v = unsafe { CStr::from_ptr(uncopy_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
