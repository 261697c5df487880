use uncopy::operators::{cnot, rotation_to_basis, swap_factors, Bit};
use uncopy::{Operator, C64};

use crate::ket::{complex_vec, emit_ket, ket_ref, shape_from, UncopyKet};
use crate::{fail, guard, non_null, out_ptr, slice_mut, OrStatus, UncopyStatus};

/// Opaque dense square operator.
pub struct UncopyOperator(pub(crate) Operator);

pub(crate) fn op_ref<'a>(op: *const UncopyOperator) -> Result<&'a Operator, UncopyStatus> {
    non_null(op, "operator").map(|o| &o.0)
}

pub(crate) fn emit_op(out: *mut *mut UncopyOperator, op: Operator) -> Result<(), UncopyStatus> {
    *out_ptr(out, "out")? = Box::into_raw(Box::new(UncopyOperator(op)));
    Ok(())
}

/// # Safety
/// `dims` must be valid for `ndims` reads and `out` for one write.
#[no_mangle]
pub unsafe extern "C" fn uncopy_operator_identity(
    dims: *const usize,
    ndims: usize,
    out: *mut *mut UncopyOperator,
) -> UncopyStatus {
    guard(|| emit_op(out, Operator::identity(shape_from(dims, ndims)?)))
}

/// Row-major `n×n` matrix with `len = n²`; `im` may be null.
///
/// # Safety
/// `re` (and non-null `im`) valid for `len` reads, `dims` for `ndims` reads,
/// `out` for one write.
#[no_mangle]
pub unsafe extern "C" fn uncopy_operator_from_matrix(
    re: *const f64,
    im: *const f64,
    len: usize,
    dims: *const usize,
    ndims: usize,
    out: *mut *mut UncopyOperator,
) -> UncopyStatus {
    guard(|| {
        let shape = shape_from(dims, ndims)?;
        let op = Operator::from_matrix(complex_vec(re, im, len)?, shape).or_status()?;
        emit_op(out, op)
    })
}

/// Two-qubit C-NOT, first qubit controls.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn uncopy_operator_cnot(out: *mut *mut UncopyOperator) -> UncopyStatus {
    guard(|| emit_op(out, cnot()))
}

/// Permutation exchanging factors `i` and `j`.
///
/// # Safety
/// `dims` must be valid for `ndims` reads and `out` for one write.
#[no_mangle]
pub unsafe extern "C" fn uncopy_operator_swap_factors(
    dims: *const usize,
    ndims: usize,
    i: usize,
    j: usize,
    out: *mut *mut UncopyOperator,
) -> UncopyStatus {
    guard(|| {
        let shape = shape_from(dims, ndims)?;
        emit_op(out, swap_factors(&shape, i, j).or_status()?)
    })
}

/// Qubit rotation sending `alpha|0⟩ + beta|1⟩` to `|target⟩` (0 or 1).
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn uncopy_operator_rotation_to_basis(
    alpha_re: f64,
    alpha_im: f64,
    beta_re: f64,
    beta_im: f64,
    target: u8,
    out: *mut *mut UncopyOperator,
) -> UncopyStatus {
    guard(|| {
        let bit = Bit::try_from(target).or_status()?;
        let r = rotation_to_basis(C64::new(alpha_re, alpha_im), C64::new(beta_re, beta_im), bit)
            .or_status()?;
        emit_op(out, r)
    })
}

/// # Safety
/// `op` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn uncopy_operator_free(op: *mut UncopyOperator) {
    if !op.is_null() {
        drop(Box::from_raw(op));
    }
}

/// Side length, or 0 for a null handle.
///
/// # Safety
/// `op` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn uncopy_operator_dim(op: *const UncopyOperator) -> usize {
    op.as_ref().map_or(0, |o| o.0.dim())
}

/// Copies the row-major entries; `len` must equal `dim²`.
///
/// # Safety
/// `op` must be a live handle; `re`, `im` valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn uncopy_operator_entries(
    op: *const UncopyOperator,
    re: *mut f64,
    im: *mut f64,
    len: usize,
) -> UncopyStatus {
    guard(|| {
        let m = op_ref(op)?.matrix();
        if len != m.len() {
            return Err(fail(
                UncopyStatus::DimensionMismatch,
                format!("buffer holds {len}, operator has {}", m.len()),
            ));
        }
        let (re, im) = (slice_mut(re, len, "re")?, slice_mut(im, len, "im")?);
        for (i, z) in m.iter().enumerate() {
            re[i] = z.re;
            im[i] = z.im;
        }
        Ok(())
    })
}

/// # Safety
/// `op`, `x` must be live handles; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn uncopy_operator_apply(
    op: *const UncopyOperator,
    x: *const UncopyKet,
    out: *mut *mut UncopyKet,
) -> UncopyStatus {
    guard(|| emit_ket(out, op_ref(op)?.apply(ket_ref(x)?).or_status()?))
}

/// `a · b` (`b` acts first).
///
/// # Safety
/// `a`, `b` must be live handles; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn uncopy_operator_compose(
    a: *const UncopyOperator,
    b: *const UncopyOperator,
    out: *mut *mut UncopyOperator,
) -> UncopyStatus {
    guard(|| emit_op(out, op_ref(a)?.compose(op_ref(b)?).or_status()?))
}

/// Writes whether `max|U†U − I| < tol` and the deviation itself.
///
/// # Safety
/// `op` must be a live handle; `unitary`, `deviation` valid for one write each.
#[no_mangle]
pub unsafe extern "C" fn uncopy_operator_is_unitary(
    op: *const UncopyOperator,
    tol: f64,
    unitary: *mut bool,
    deviation: *mut f64,
) -> UncopyStatus {
    guard(|| {
        let (ok, dev) = op_ref(op)?.is_unitary(tol);
        *out_ptr(unitary, "unitary")? = ok;
        *out_ptr(deviation, "deviation")? = dev;
        Ok(())
    })
}
