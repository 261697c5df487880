use crate::error::{Error, Result};
use crate::hilbert::{check_coefficients, check_dims, Ket, SpaceShape, C64, DEFAULT_TOL, ONE, ZERO};

use super::Operator;

/// Computational basis bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bit {
    Zero,
    One,
}

impl TryFrom<u8> for Bit {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        match v {
            0 => Ok(Bit::Zero),
            1 => Ok(Bit::One),
            other => Err(Error::InvalidTarget(other)),
        }
    }
}

pub fn pauli_x() -> Operator {
    Operator::from_fn(SpaceShape::qubit(), |i, j| if i != j { ONE } else { ZERO })
}

/// Controlled-NOT on two qubits; the first factor is the control.
pub fn cnot() -> Operator {
    // |00⟩→|00⟩, |01⟩→|01⟩, |10⟩→|11⟩, |11⟩→|10⟩
    const IMAGE: [usize; 4] = [0, 1, 3, 2];
    Operator::from_fn(SpaceShape::qubits(2), |i, j| {
        if IMAGE[j] == i {
            ONE
        } else {
            ZERO
        }
    })
}

/// Permutation exchanging factors `i` and `j` of `shape`.
pub fn swap_factors(shape: &SpaceShape, i: usize, j: usize) -> Result<Operator> {
    let dims = shape.dims();
    let factors = dims.len();
    for index in [i, j] {
        if index >= factors {
            return Err(Error::FactorIndexOutOfRange { index, factors });
        }
    }
    if dims[i] != dims[j] {
        return Err(Error::UnequalFactorDims {
            i,
            j,
            dim_i: dims[i],
            dim_j: dims[j],
        });
    }

    let n = shape.total_dim();
    let mut image = vec![0usize; n];
    let mut digits = vec![0usize; factors];
    for (source, slot) in image.iter_mut().enumerate() {
        let mut rest = source;
        for (d, &dim) in digits.iter_mut().zip(dims).rev() {
            *d = rest % dim;
            rest /= dim;
        }
        digits.swap(i, j);
        *slot = digits.iter().zip(dims).fold(0, |acc, (&d, &dim)| acc * dim + d);
    }
    Ok(Operator::from_fn(shape.clone(), |row, col| {
        if image[col] == row {
            ONE
        } else {
            ZERO
        }
    }))
}

/// Single-qubit unitary sending `alpha|0⟩ + beta|1⟩` to the chosen basis bit.
///
/// For `Bit::Zero` the rows are `[conj(α), conj(β)]` and `[−β, α]`; for
/// `Bit::One` the two rows are exchanged.
pub fn rotation_to_basis(alpha: C64, beta: C64, target: Bit) -> Result<Operator> {
    check_coefficients(alpha, beta, DEFAULT_TOL)?;
    let project = [alpha.conj(), beta.conj()];
    let complement = [-beta, alpha];
    let (top, bottom) = match target {
        Bit::Zero => (project, complement),
        Bit::One => (complement, project),
    };
    Operator::from_matrix(
        vec![top[0], top[1], bottom[0], bottom[1]],
        SpaceShape::qubit(),
    )
}

/// Outcome of comparing an operator against the literal factor exchange.
#[derive(Debug, Clone, PartialEq)]
pub struct SwapCheck {
    pub is_swap: bool,
    pub max_deviation: f64,
    /// Global phase applied to the swap images.
    pub phase: C64,
    /// `|⟨swap·p | U·p⟩|² / (‖U·p‖²‖swap·p‖²)` per probe.
    pub probe_fidelities: Vec<f64>,
}

/// Tests whether `u` agrees with `swap_factors(shape, i, j)` on every probe,
/// up to a single global phase.
///
/// The phase is taken from the first probe whose images overlap
/// non-negligibly; deviation is the largest `‖U·p − phase·swap·p‖`.
pub fn acts_as_swap_on(
    u: &Operator,
    shape: &SpaceShape,
    i: usize,
    j: usize,
    probes: &[Ket],
    tol: f64,
) -> Result<SwapCheck> {
    if probes.is_empty() {
        return Err(Error::EmptyList);
    }
    let swap = swap_factors(shape, i, j)?;
    check_dims(u.dim(), swap.dim())?;

    let mut images = Vec::with_capacity(probes.len());
    for p in probes {
        images.push((u.apply(p)?, swap.apply(p)?));
    }

    let phase = images
        .iter()
        .map(|(actual, swapped)| swapped.inner(actual))
        .find_map(|ov| match ov {
            Ok(ov) if ov.norm() > crate::hilbert::DEGENERATE_NORM => Some(Ok(ov / ov.norm())),
            Ok(_) => None,
            Err(e) => Some(Err(e)),
        })
        .transpose()?
        .unwrap_or(ONE);

    let mut max_deviation: f64 = 0.0;
    let mut probe_fidelities = Vec::with_capacity(images.len());
    for (actual, swapped) in &images {
        max_deviation = max_deviation.max(actual.distance(&swapped.scale(phase))?);
        let denom = actual.norm_sqr() * swapped.norm_sqr();
        let fid = if denom > 0.0 {
            swapped.inner(actual)?.norm_sqr() / denom
        } else {
            0.0
        };
        probe_fidelities.push(fid);
    }

    Ok(SwapCheck {
        is_swap: max_deviation < tol,
        max_deviation,
        phase,
        probe_fidelities,
    })
}
