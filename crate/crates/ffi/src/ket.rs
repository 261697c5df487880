use uncopy::hilbert::{fidelity, haar_random_ket, tensor};
use uncopy::{Ket, SpaceShape, C64};

use crate::{fail, guard, non_null, out_ptr, slice, slice_mut, OrStatus, UncopyStatus};

/// Opaque state vector.
pub struct UncopyKet(pub(crate) Ket);

pub(crate) fn shape_from(dims: *const usize, ndims: usize) -> Result<SpaceShape, UncopyStatus> {
    SpaceShape::new(slice(dims, ndims, "dims")?.to_vec()).or_status()
}

pub(crate) fn complex_vec(re: *const f64, im: *const f64, len: usize) -> Result<Vec<C64>, UncopyStatus> {
    let re = slice(re, len, "re")?;
    // null imaginary part means a real vector
    let im = if im.is_null() { None } else { Some(slice(im, len, "im")?) };
    Ok((0..len)
        .map(|i| C64::new(re[i], im.map_or(0.0, |v| v[i])))
        .collect())
}

pub(crate) fn ket_ref<'a>(k: *const UncopyKet) -> Result<&'a Ket, UncopyStatus> {
    non_null(k, "ket").map(|k| &k.0)
}

pub(crate) fn emit_ket(out: *mut *mut UncopyKet, ket: Ket) -> Result<(), UncopyStatus> {
    *out_ptr(out, "out")? = Box::into_raw(Box::new(UncopyKet(ket)));
    Ok(())
}

/// Creates a ket from `len` amplitudes over the factor dimensions `dims`.
/// `im` may be null for real amplitudes.
///
/// # Safety
/// `re` (and `im` when non-null) must be valid for `len` reads, `dims` for
/// `ndims` reads, and `out` for one write.
#[no_mangle]
pub unsafe extern "C" fn uncopy_ket_new(
    re: *const f64,
    im: *const f64,
    len: usize,
    dims: *const usize,
    ndims: usize,
    out: *mut *mut UncopyKet,
) -> UncopyStatus {
    guard(|| {
        let shape = shape_from(dims, ndims)?;
        let ket = Ket::from_amplitudes(complex_vec(re, im, len)?, shape).or_status()?;
        emit_ket(out, ket)
    })
}

/// Computational basis vector `index` of the given shape.
///
/// # Safety
/// `dims` must be valid for `ndims` reads and `out` for one write.
#[no_mangle]
pub unsafe extern "C" fn uncopy_ket_basis(
    dims: *const usize,
    ndims: usize,
    index: usize,
    out: *mut *mut UncopyKet,
) -> UncopyStatus {
    guard(|| {
        let ket = Ket::basis(shape_from(dims, ndims)?, index).or_status()?;
        emit_ket(out, ket)
    })
}

/// Seeded uniformly random unit vector of dimension `dim`.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn uncopy_ket_haar(dim: usize, seed: u64, out: *mut *mut UncopyKet) -> UncopyStatus {
    guard(|| {
        if dim == 0 {
            return Err(fail(UncopyStatus::InvalidArgument, "dimension must be positive"));
        }
        emit_ket(out, haar_random_ket(dim, seed))
    })
}

/// # Safety
/// `k` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn uncopy_ket_free(k: *mut UncopyKet) {
    if !k.is_null() {
        drop(Box::from_raw(k));
    }
}

/// Total dimension, or 0 for a null handle.
///
/// # Safety
/// `k` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn uncopy_ket_dim(k: *const UncopyKet) -> usize {
    k.as_ref().map_or(0, |k| k.0.dim())
}

/// Euclidean norm, or NaN for a null handle.
///
/// # Safety
/// `k` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn uncopy_ket_norm(k: *const UncopyKet) -> f64 {
    k.as_ref().map_or(f64::NAN, |k| k.0.norm())
}

/// Copies the amplitudes into `re`/`im`, each with room for `len` values;
/// `len` must equal the ket dimension.
///
/// # Safety
/// `k` must be a live handle; `re` and `im` must be valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn uncopy_ket_amplitudes(
    k: *const UncopyKet,
    re: *mut f64,
    im: *mut f64,
    len: usize,
) -> UncopyStatus {
    guard(|| {
        let ket = ket_ref(k)?;
        if len != ket.dim() {
            return Err(fail(
                UncopyStatus::DimensionMismatch,
                format!("buffer holds {len}, ket has {}", ket.dim()),
            ));
        }
        let (re, im) = (slice_mut(re, len, "re")?, slice_mut(im, len, "im")?);
        for (i, a) in ket.amplitudes().iter().enumerate() {
            re[i] = a.re;
            im[i] = a.im;
        }
        Ok(())
    })
}

/// `⟨a|b⟩`, conjugate-linear in `a`.
///
/// # Safety
/// `a`, `b` must be live handles; `re`, `im` valid for one write each.
#[no_mangle]
pub unsafe extern "C" fn uncopy_ket_inner(
    a: *const UncopyKet,
    b: *const UncopyKet,
    re: *mut f64,
    im: *mut f64,
) -> UncopyStatus {
    guard(|| {
        let z = ket_ref(a)?.inner(ket_ref(b)?).or_status()?;
        *out_ptr(re, "re")? = z.re;
        *out_ptr(im, "im")? = z.im;
        Ok(())
    })
}

/// Kronecker product of `count` kets in order.
///
/// # Safety
/// `parts` must be valid for `count` reads of live handles; `out` for one write.
#[no_mangle]
pub unsafe extern "C" fn uncopy_ket_tensor(
    parts: *const *const UncopyKet,
    count: usize,
    out: *mut *mut UncopyKet,
) -> UncopyStatus {
    guard(|| {
        let handles = slice(parts, count, "parts")?;
        let kets = handles
            .iter()
            .map(|&p| ket_ref(p).cloned())
            .collect::<Result<Vec<_>, _>>()?;
        emit_ket(out, tensor(&kets).or_status()?)
    })
}

/// # Safety
/// `k` must be a live handle; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn uncopy_ket_normalize(k: *const UncopyKet, out: *mut *mut UncopyKet) -> UncopyStatus {
    guard(|| emit_ket(out, ket_ref(k)?.normalize().or_status()?))
}

/// `|⟨a|b⟩|²` for normalized kets.
///
/// # Safety
/// `a`, `b` must be live handles; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn uncopy_fidelity(a: *const UncopyKet, b: *const UncopyKet, out: *mut f64) -> UncopyStatus {
    guard(|| {
        *out_ptr(out, "out")? = fidelity(ket_ref(a)?, ket_ref(b)?).or_status()?;
        Ok(())
    })
}
