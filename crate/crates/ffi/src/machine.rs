use uncopy::machines::{
    build_counterexample_machine_with, build_swap_machine_with, cnot_copy_delete_trial,
    mcnot_circuit, verify_uncopy, CopyMode, Machine,
};
use uncopy::{Ket, C64};

use crate::operator::{emit_op, UncopyOperator};
use crate::{fail, guard, non_null, out_ptr, OrStatus, UncopyStatus};

/// Opaque deleting machine: operator plus its defining ancilla states.
pub struct UncopyMachine(Machine);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UncopyMachineReport {
    pub feasible: bool,
    pub ancilla_overlap_re: f64,
    pub ancilla_overlap_im: f64,
    pub gram_residual: f64,
    pub constraint_residual: f64,
    pub unitarity_deviation: f64,
    pub is_swap: bool,
    pub swap_deviation: f64,
    pub uncopy_residual: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UncopyCopyMode {
    Copy = 0,
    Delete = 1,
}

impl From<UncopyCopyMode> for CopyMode {
    fn from(m: UncopyCopyMode) -> Self {
        match m {
            UncopyCopyMode::Copy => CopyMode::Copy,
            UncopyCopyMode::Delete => CopyMode::Delete,
        }
    }
}

fn sigma(index: u8) -> Result<Ket, UncopyStatus> {
    match index {
        0 => Ok(Ket::h()),
        1 => Ok(Ket::v()),
        other => Err(fail(
            UncopyStatus::InvalidArgument,
            format!("sigma index must be 0 or 1, got {other}"),
        )),
    }
}

fn emit_machine(out: *mut *mut UncopyMachine, m: Machine) -> Result<(), UncopyStatus> {
    *out_ptr(out, "out")? = Box::into_raw(Box::new(UncopyMachine(m)));
    Ok(())
}

fn machine_ref<'a>(m: *const UncopyMachine) -> Result<&'a Machine, UncopyStatus> {
    non_null(m, "machine").map(|m| &m.0)
}

/// Swap machine: exchanges the second copy with a one-qubit ancilla in `Σ`
/// (`sigma_index` 0 for H, 1 for V).
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn uncopy_machine_swap(sigma_index: u8, out: *mut *mut UncopyMachine) -> UncopyStatus {
    guard(|| emit_machine(out, build_swap_machine_with(sigma(sigma_index)?).or_status()?))
}

/// Completed deleting machine with `A_H = (H+V)/√2`, `A_V = (H−V)/√2`, plus
/// `spectators` inert ancilla qubits.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn uncopy_machine_counterexample(
    sigma_index: u8,
    spectators: usize,
    out: *mut *mut UncopyMachine,
) -> UncopyStatus {
    guard(|| {
        if spectators > 7 {
            return Err(fail(UncopyStatus::InvalidArgument, "at most 7 spectators"));
        }
        let m = build_counterexample_machine_with(sigma(sigma_index)?, spectators).or_status()?;
        emit_machine(out, m)
    })
}

/// # Safety
/// `m` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn uncopy_machine_free(m: *mut UncopyMachine) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// # Safety
/// `m` must be a live handle; `report` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn uncopy_machine_report(
    m: *const UncopyMachine,
    report: *mut UncopyMachineReport,
) -> UncopyStatus {
    guard(|| {
        let r = &machine_ref(m)?.report;
        *out_ptr(report, "report")? = UncopyMachineReport {
            feasible: r.feasible,
            ancilla_overlap_re: r.ancilla_overlap.re,
            ancilla_overlap_im: r.ancilla_overlap.im,
            gram_residual: r.gram_residual,
            constraint_residual: r.constraint_residual,
            unitarity_deviation: r.unitarity_deviation,
            is_swap: r.is_swap,
            swap_deviation: r.swap_deviation,
            uncopy_residual: r.uncopy_residual,
        };
        Ok(())
    })
}

/// Copy of the machine's operator as a new handle.
///
/// # Safety
/// `m` must be a live handle; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn uncopy_machine_operator(
    m: *const UncopyMachine,
    out: *mut *mut UncopyOperator,
) -> UncopyStatus {
    guard(|| emit_op(out, machine_ref(m)?.operator.clone()))
}

/// `‖U·ΨΨA − Ψ⊗Σ⊗(αA_H + βA_V)‖` for `Ψ = αH + βV`.
///
/// # Safety
/// `m` must be a live handle; `residual` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn uncopy_machine_verify_uncopy(
    m: *const UncopyMachine,
    alpha_re: f64,
    alpha_im: f64,
    beta_re: f64,
    beta_im: f64,
    residual: *mut f64,
) -> UncopyStatus {
    guard(|| {
        let m = machine_ref(m)?;
        let r = verify_uncopy(
            &m.operator,
            &m.spec,
            C64::new(alpha_re, alpha_im),
            C64::new(beta_re, beta_im),
        )
        .or_status()?;
        *out_ptr(residual, "residual")? = r;
        Ok(())
    })
}

/// Fidelity of plain C-NOT copying (`S0 → SS`) or deleting (`SS → S0`).
///
/// # Safety
/// `fidelity` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn uncopy_cnot_trial(
    alpha_re: f64,
    alpha_im: f64,
    beta_re: f64,
    beta_im: f64,
    mode: UncopyCopyMode,
    fidelity: *mut f64,
) -> UncopyStatus {
    guard(|| {
        let t = cnot_copy_delete_trial(C64::new(alpha_re, alpha_im), C64::new(beta_re, beta_im), mode.into())
            .or_status()?;
        *out_ptr(fidelity, "fidelity")? = t.fidelity;
        Ok(())
    })
}

/// C-NOT conjugated by rotations for the known state `alpha|0⟩ + beta|1⟩`.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn uncopy_mcnot_circuit(
    alpha_re: f64,
    alpha_im: f64,
    beta_re: f64,
    beta_im: f64,
    mode: UncopyCopyMode,
    out: *mut *mut UncopyOperator,
) -> UncopyStatus {
    guard(|| {
        let op = mcnot_circuit(C64::new(alpha_re, alpha_im), C64::new(beta_re, beta_im), mode.into())
            .or_status()?;
        emit_op(out, op)
    })
}
