//! Copy and delete machines as explicit operators.
//!
//! Deleting machines act on `copy₁ ⊗ copy₂ ⊗ ancilla`. The ancilla's first
//! factor is the active slot that starts in the blank state `Σ`; any further
//! factors are inert spectator qubits held in `H`.

use num_complex::ComplexFloat;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hilbert::{
    check_coefficients, check_dims, haar_random_coefficients, linear_combination, tensor, Ket,
    SpaceShape, C64, DEFAULT_TOL, ONE, ZERO,
};
use crate::operators::{
    acts_as_swap_on, cnot, complete_to_unitary, gram_feasibility, rotation_to_basis, tensor_op,
    Bit, Operator, PartialMapSpec,
};

/// Overlap above which two states count as the same state in clonability checks.
pub const IDENTICAL_OVERLAP: f64 = 1.0 - 1e-10;

/// Factor index of the second copy within the composite space.
pub const COPY_FACTOR: usize = 1;
/// Factor index of the active ancilla slot.
pub const ANCILLA_SLOT: usize = 2;

/// `Σ`, `A`, `A_H`, `A_V` of a deleting machine `ΨΨA → ΨΣA_Ψ`.
#[derive(Debug, Clone, PartialEq)]
pub struct DeletingMachineSpec {
    sigma: Ket,
    ancilla_init: Ket,
    ancilla_h: Ket,
    ancilla_v: Ket,
    spectator_count: usize,
}

impl DeletingMachineSpec {
    pub fn new(sigma: Ket, ancilla_init: Ket, ancilla_h: Ket, ancilla_v: Ket) -> Result<Self> {
        if sigma.dim() != 2 {
            return Err(Error::MalformedSpec(format!(
                "sigma must be a qubit state, got dimension {}",
                sigma.dim()
            )));
        }
        for (name, k) in [
            ("sigma", &sigma),
            ("ancilla_init", &ancilla_init),
            ("ancilla_h", &ancilla_h),
            ("ancilla_v", &ancilla_v),
        ] {
            if !k.is_normalized(DEFAULT_TOL) {
                return Err(Error::MalformedSpec(format!(
                    "{name} is not normalized (norm {})",
                    k.norm()
                )));
            }
        }
        if ancilla_h.shape() != ancilla_init.shape() || ancilla_v.shape() != ancilla_init.shape() {
            return Err(Error::MalformedSpec(format!(
                "ancilla shapes differ: A {}, A_H {}, A_V {}",
                ancilla_init.shape(),
                ancilla_h.shape(),
                ancilla_v.shape()
            )));
        }
        Ok(DeletingMachineSpec {
            sigma: Ket::qubit(sigma.amplitude(0), sigma.amplitude(1)),
            ancilla_init,
            ancilla_h,
            ancilla_v,
            spectator_count: 0,
        })
    }

    /// Ancilla is a single qubit starting in `Σ`; `A_H = H`, `A_V = V`.
    pub fn swap(sigma: Ket) -> Result<Self> {
        Self::new(sigma.clone(), sigma, Ket::h(), Ket::v())
    }

    /// Ancilla starts in `Σ`; `A_H = (H+V)/√2`, `A_V = (H−V)/√2`.
    pub fn counterexample(sigma: Ket) -> Result<Self> {
        Self::new(sigma.clone(), sigma, Ket::plus(), Ket::minus())
    }

    /// Appends `n` spectator qubits in `H` to every ancilla state.
    pub fn with_spectators(mut self, n: usize) -> Self {
        for _ in 0..n {
            self.ancilla_init = self.ancilla_init.kron(&Ket::h());
            self.ancilla_h = self.ancilla_h.kron(&Ket::h());
            self.ancilla_v = self.ancilla_v.kron(&Ket::h());
        }
        self.spectator_count += n;
        self
    }

    pub fn sigma(&self) -> &Ket {
        &self.sigma
    }

    pub fn ancilla_init(&self) -> &Ket {
        &self.ancilla_init
    }

    pub fn ancilla_h(&self) -> &Ket {
        &self.ancilla_h
    }

    pub fn ancilla_v(&self) -> &Ket {
        &self.ancilla_v
    }

    pub fn spectator_count(&self) -> usize {
        self.spectator_count
    }

    /// `qubit ⊗ qubit ⊗ ancilla`
    pub fn composite_shape(&self) -> SpaceShape {
        SpaceShape::qubits(2).concat(self.ancilla_init.shape())
    }

    /// `ΨΨA` for `Ψ = αH + βV`.
    pub fn input_state(&self, alpha: C64, beta: C64) -> Ket {
        let psi = Ket::qubit(alpha, beta);
        psi.kron(&psi).kron(&self.ancilla_init)
    }
}

/// The three constraints defining a deleting machine:
///
/// 1. `HHA → HΣA_H`
/// 2. `VVA → VΣA_V`
/// 3. `(HV + VH)A → HΣA_V + VΣA_H`
///
/// The third pair is not normalized.
pub fn pb_constraints(spec: &DeletingMachineSpec) -> Result<PartialMapSpec> {
    let (h, v) = (Ket::h(), Ket::v());
    let a = spec.ancilla_init();
    let s = spec.sigma();
    let cat = |parts: &[&Ket]| tensor(&parts.iter().map(|k| (*k).clone()).collect::<Vec<_>>());

    let in1 = cat(&[&h, &h, a])?;
    let out1 = cat(&[&h, s, spec.ancilla_h()])?;
    let in2 = cat(&[&v, &v, a])?;
    let out2 = cat(&[&v, s, spec.ancilla_v()])?;
    let in3 = cat(&[&h, &v, a])?.add(&cat(&[&v, &h, a])?)?;
    let out3 = cat(&[&h, s, spec.ancilla_v()])?.add(&cat(&[&v, s, spec.ancilla_h()])?)?;

    PartialMapSpec::new(
        spec.composite_shape(),
        vec![(in1, out1), (in2, out2), (in3, out3)],
    )
}

/// `αA_H + βA_V`, the ancilla state linearity forces for `Ψ = αH + βV`.
pub fn required_ancilla(alpha: C64, beta: C64, ancilla_h: &Ket, ancilla_v: &Ket) -> Result<Ket> {
    check_coefficients(alpha, beta, DEFAULT_TOL)?;
    check_dims(ancilla_h.dim(), ancilla_v.dim())?;
    linear_combination(&[(alpha, ancilla_h), (beta, ancilla_v)])
}

/// `|⟨A_H|A_V⟩|`, which is also the only nonzero Gram residual of
/// [`pb_constraints`].
pub fn orthogonality_residual(spec: &DeletingMachineSpec) -> f64 {
    spec.ancilla_h()
        .inner(spec.ancilla_v())
        .map(|c| c.norm())
        .expect("spec invariant: ancilla shapes agree")
}

/// `‖U·ΨΨA − Ψ⊗Σ⊗(αA_H + βA_V)‖` for `Ψ = αH + βV`.
pub fn verify_uncopy(u: &Operator, spec: &DeletingMachineSpec, alpha: C64, beta: C64) -> Result<f64> {
    check_coefficients(alpha, beta, DEFAULT_TOL)?;
    let psi = Ket::qubit(alpha, beta);
    let target = tensor(&[
        psi,
        spec.sigma().clone(),
        required_ancilla(alpha, beta, spec.ancilla_h(), spec.ancilla_v())?,
    ])?;
    u.apply(&spec.input_state(alpha, beta))?.distance(&target)
}

#[derive(Debug, Clone, PartialEq)]
pub struct MachineReport {
    pub feasible: bool,
    /// `⟨A_H|A_V⟩`
    pub ancilla_overlap: C64,
    pub gram_residual: f64,
    /// Residual of the operator against its own constraints.
    pub constraint_residual: f64,
    pub unitarity_deviation: f64,
    pub is_swap: bool,
    pub swap_deviation: f64,
    /// Fidelity of `U·p` with `swap·p` for the probes `HHA` and `VVA`.
    pub swap_probe_fidelities: Vec<f64>,
    /// Worst [`verify_uncopy`] residual over the sampled coefficients.
    pub uncopy_residual: f64,
}

/// A constructed machine together with its spec and verdicts.
#[derive(Debug, Clone)]
pub struct Machine {
    pub operator: Operator,
    pub spec: DeletingMachineSpec,
    pub report: MachineReport,
}

/// `(1,0)`, `(0,1)`, `(1/√2, 1/√2)` followed by `n` Haar-random pairs.
pub fn coefficient_samples(seed: u64, n: usize) -> Vec<(C64, C64)> {
    let s = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let mut out = vec![(ONE, ZERO), (ZERO, ONE), (s, s)];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    out.extend((0..n).map(|_| haar_random_coefficients(&mut rng)));
    out
}

/// Swap probes `HHA` and `VVA`.
pub fn swap_probes(spec: &DeletingMachineSpec) -> [Ket; 2] {
    [spec.input_state(ONE, ZERO), spec.input_state(ZERO, ONE)]
}

pub fn evaluate_machine(
    u: &Operator,
    spec: &DeletingMachineSpec,
    samples: &[(C64, C64)],
    tol: f64,
) -> Result<MachineReport> {
    let constraints = pb_constraints(spec)?;
    let gram = gram_feasibility(&constraints, tol);
    let swap = acts_as_swap_on(
        u,
        &spec.composite_shape(),
        COPY_FACTOR,
        ANCILLA_SLOT,
        &swap_probes(spec),
        tol,
    )?;
    let mut uncopy_residual: f64 = 0.0;
    for &(a, b) in samples {
        uncopy_residual = uncopy_residual.max(verify_uncopy(u, spec, a, b)?);
    }
    Ok(MachineReport {
        feasible: gram.feasible,
        ancilla_overlap: spec.ancilla_h().inner(spec.ancilla_v())?,
        gram_residual: gram.max_residual,
        constraint_residual: constraints.max_pair_residual(u)?,
        unitarity_deviation: u.is_unitary(tol).1,
        is_swap: swap.is_swap,
        swap_deviation: swap.max_deviation,
        swap_probe_fidelities: swap.probe_fidelities,
        uncopy_residual,
    })
}

const REPORT_SEED: u64 = 0;
const REPORT_SAMPLES: usize = 32;

/// Exchange of the second copy with the ancilla slot, `Σ = H`.
pub fn build_swap_machine() -> Result<Machine> {
    build_swap_machine_with(Ket::h())
}

pub fn build_swap_machine_with(sigma: Ket) -> Result<Machine> {
    let spec = DeletingMachineSpec::swap(sigma)?;
    let operator = crate::operators::swap_factors(&spec.composite_shape(), COPY_FACTOR, ANCILLA_SLOT)?;
    let report = evaluate_machine(
        &operator,
        &spec,
        &coefficient_samples(REPORT_SEED, REPORT_SAMPLES),
        DEFAULT_TOL,
    )?;
    Ok(Machine {
        operator,
        spec,
        report,
    })
}

/// Deleting machine with orthogonal `A_H = (H+V)/√2`, `A_V = (H−V)/√2` that
/// is nonetheless not a swap. `Σ = H`, no spectators.
pub fn build_counterexample_machine() -> Result<Machine> {
    build_counterexample_machine_with(Ket::h(), 0)
}

pub fn build_counterexample_machine_with(sigma: Ket, spectators: usize) -> Result<Machine> {
    let spec = DeletingMachineSpec::counterexample(sigma)?.with_spectators(spectators);
    let operator = complete_to_unitary(&pb_constraints(&spec)?, DEFAULT_TOL)?;
    let report = evaluate_machine(
        &operator,
        &spec,
        &coefficient_samples(REPORT_SEED, REPORT_SAMPLES),
        DEFAULT_TOL,
    )?;
    Ok(Machine {
        operator,
        spec,
        report,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CopyMode {
    Copy,
    Delete,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CopyTrial {
    pub actual: Ket,
    pub target: Ket,
    pub fidelity: f64,
}

/// Plain C-NOT used as a copier (`S0 → SS`) or deleter (`SS → S0`).
pub fn cnot_copy_delete_trial(alpha: C64, beta: C64, mode: CopyMode) -> Result<CopyTrial> {
    check_coefficients(alpha, beta, DEFAULT_TOL)?;
    run_trial(&cnot(), &Ket::qubit(alpha, beta), mode)
}

/// Applies a two-qubit circuit to `|S0⟩` (copy) or `|SS⟩` (delete) and scores
/// it against the ideal output.
pub fn run_trial(circuit: &Operator, s: &Ket, mode: CopyMode) -> Result<CopyTrial> {
    let s0 = tensor(&[s.clone(), Ket::h()])?;
    let ss = tensor(&[s.clone(), s.clone()])?;
    let (input, target) = match mode {
        CopyMode::Copy => (s0, ss),
        CopyMode::Delete => (ss, s0),
    };
    let actual = circuit.apply(&input)?;
    let fidelity = crate::hilbert::fidelity(&actual, &target)?;
    Ok(CopyTrial {
        actual,
        target,
        fidelity,
    })
}

/// C-NOT conjugated by rotations built from known `(α, β)`.
///
/// With `R` sending `S` to `|1⟩`: copy is `(R†⊗R†)·CNOT·(R⊗I)` and delete is
/// `(R†⊗I)·CNOT·(R⊗R)`, the adjoint of copy.
pub fn mcnot_circuit(alpha: C64, beta: C64, mode: CopyMode) -> Result<Operator> {
    let r = rotation_to_basis(alpha, beta, Bit::One)?;
    let rd = r.dagger();
    let id = Operator::identity(SpaceShape::qubit());
    let (before, after) = match mode {
        CopyMode::Copy => (tensor_op(&[r, id])?, tensor_op(&[rd.clone(), rd])?),
        CopyMode::Delete => (tensor_op(&[r.clone(), r])?, tensor_op(&[rd, id])?),
    };
    after.compose(&cnot())?.compose(&before)
}

#[derive(Debug, Clone)]
pub struct ClonabilityReport {
    pub clonable: bool,
    /// Largest `|⟨Ψᵢ|Ψⱼ⟩|` among distinct states; 0 for a single state.
    pub worst_overlap: f64,
    /// Number of states left after merging identical ones.
    pub distinct: usize,
    /// `ΨᵢΣA → ΨᵢΨᵢA` realized as a unitary, when clonable.
    pub witness: Option<Operator>,
}

/// Decides whether one device can copy every state in `states`.
///
/// States identical up to phase are merged first. The remaining set is
/// clonable iff it is pairwise orthogonal, in which case the copier with
/// `A_Ψ = A` is constructed.
pub fn yuen_clonability(
    states: &[Ket],
    sigma: &Ket,
    ancilla_init: &Ket,
    tol: f64,
) -> Result<ClonabilityReport> {
    if states.is_empty() {
        return Err(Error::EmptyList);
    }
    for k in states.iter().chain([sigma, ancilla_init]) {
        if !k.is_normalized(DEFAULT_TOL) {
            return Err(Error::NotNormalized { norm: k.norm() });
        }
    }
    let dim = states[0].dim();
    for k in states.iter().chain([sigma]) {
        check_dims(dim, k.dim())?;
    }

    let mut distinct: Vec<&Ket> = Vec::new();
    for k in states {
        let mut seen = false;
        for d in &distinct {
            if d.inner(k)?.norm() > IDENTICAL_OVERLAP {
                seen = true;
                break;
            }
        }
        if !seen {
            distinct.push(k);
        }
    }

    let mut worst_overlap: f64 = 0.0;
    for (i, a) in distinct.iter().enumerate() {
        for b in &distinct[i + 1..] {
            worst_overlap = worst_overlap.max(a.inner(b)?.abs());
        }
    }
    let clonable = worst_overlap < tol;

    let witness = if clonable {
        let pairs = distinct
            .iter()
            .map(|&psi| {
                Ok((
                    tensor(&[psi.clone(), sigma.clone(), ancilla_init.clone()])?,
                    tensor(&[psi.clone(), psi.clone(), ancilla_init.clone()])?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        let shape = pairs[0].0.shape().clone();
        Some(complete_to_unitary(&PartialMapSpec::new(shape, pairs)?, tol)?)
    } else {
        None
    };

    Ok(ClonabilityReport {
        clonable,
        worst_overlap,
        distinct: distinct.len(),
        witness,
    })
}
