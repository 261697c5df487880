//! Complex state vectors on tensor-product spaces.
//!
//! Basis convention: for a qubit, index 0 is `H` (the `|0⟩` bit) and index 1
//! is `V` (the `|1⟩` bit). Composite indices are big-endian over the factors,
//! so the first factor is the most significant digit.

use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Tolerance for normalization and equality checks.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Vectors with norm below this are treated as zero.
pub const DEGENERATE_NORM: f64 = 1e-12;

pub(crate) const ZERO: C64 = C64::new(0.0, 0.0);
pub(crate) const ONE: C64 = C64::new(1.0, 0.0);

/// Ordered list of subsystem dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpaceShape {
    dims: Vec<usize>,
}

impl SpaceShape {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::EmptyShape);
        }
        if let Some((index, &dim)) = dims.iter().enumerate().find(|(_, &d)| d == 0) {
            return Err(Error::InvalidFactorDim { index, dim });
        }
        Ok(SpaceShape { dims })
    }

    pub fn qubit() -> Self {
        SpaceShape { dims: vec![2] }
    }

    pub fn qubits(n: usize) -> Self {
        assert!(n > 0, "need at least one qubit");
        SpaceShape { dims: vec![2; n] }
    }

    /// A single unstructured factor of the given dimension.
    pub fn flat(dim: usize) -> Result<Self> {
        Self::new(vec![dim])
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn factor_count(&self) -> usize {
        self.dims.len()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().product()
    }

    /// Tensor-product shape: `self` factors first, then `other`.
    pub fn concat(&self, other: &SpaceShape) -> SpaceShape {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        SpaceShape { dims }
    }
}

impl fmt::Display for SpaceShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(|d| d.to_string()).collect();
        write!(f, "[{}]", parts.join("x"))
    }
}

/// A vector of complex amplitudes over a [`SpaceShape`].
///
/// Kets are not implicitly normalized: constraint vectors such as
/// `(HV + VH)A` are deliberately kept at norm √2.
#[derive(Debug, Clone, PartialEq)]
pub struct Ket {
    amps: Vec<C64>,
    shape: SpaceShape,
}

impl Ket {
    pub fn from_amplitudes(amps: Vec<C64>, shape: SpaceShape) -> Result<Self> {
        let expected = shape.total_dim();
        if amps.len() != expected {
            return Err(Error::ShapeMismatch {
                expected,
                got: amps.len(),
            });
        }
        Ok(Ket { amps, shape })
    }

    /// Real amplitudes, for convenience in tests and fixtures.
    pub fn from_real(amps: &[f64], shape: SpaceShape) -> Result<Self> {
        Self::from_amplitudes(amps.iter().map(|&a| C64::new(a, 0.0)).collect(), shape)
    }

    pub fn basis(shape: SpaceShape, index: usize) -> Result<Self> {
        let dim = shape.total_dim();
        if index >= dim {
            return Err(Error::ShapeMismatch {
                expected: dim,
                got: index + 1,
            });
        }
        let mut amps = vec![ZERO; dim];
        amps[index] = ONE;
        Ok(Ket { amps, shape })
    }

    /// `alpha|0⟩ + beta|1⟩`, not normalized.
    pub fn qubit(alpha: C64, beta: C64) -> Self {
        Ket {
            amps: vec![alpha, beta],
            shape: SpaceShape::qubit(),
        }
    }

    /// Horizontal polarization, the `|0⟩` bit.
    pub fn h() -> Self {
        Self::qubit(ONE, ZERO)
    }

    /// Vertical polarization, the `|1⟩` bit.
    pub fn v() -> Self {
        Self::qubit(ZERO, ONE)
    }

    /// `(H + V)/√2`
    pub fn plus() -> Self {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        Self::qubit(C64::new(s, 0.0), C64::new(s, 0.0))
    }

    /// `(H − V)/√2`
    pub fn minus() -> Self {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        Self::qubit(C64::new(s, 0.0), C64::new(-s, 0.0))
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> C64 {
        self.amps[index]
    }

    pub fn shape(&self) -> &SpaceShape {
        &self.shape
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn into_amplitudes(self) -> Vec<C64> {
        self.amps
    }

    /// `(alpha, beta)` of a qubit ket.
    pub fn coefficients(&self) -> Option<(C64, C64)> {
        (self.amps.len() == 2).then(|| (self.amps[0], self.amps[1]))
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn is_normalized(&self, tol: f64) -> bool {
        (self.norm() - 1.0).abs() < tol
    }

    /// Conjugate-linear in `self`.
    pub fn inner(&self, other: &Ket) -> Result<C64> {
        check_dims(self.dim(), other.dim())?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    pub fn normalize(&self) -> Result<Ket> {
        let norm = self.norm();
        if norm <= DEGENERATE_NORM {
            return Err(Error::DegenerateNorm { norm });
        }
        Ok(self.scale(C64::new(1.0 / norm, 0.0)))
    }

    pub fn scale(&self, c: C64) -> Ket {
        Ket {
            amps: self.amps.iter().map(|a| a * c).collect(),
            shape: self.shape.clone(),
        }
    }

    pub fn add(&self, other: &Ket) -> Result<Ket> {
        check_dims(self.dim(), other.dim())?;
        Ok(Ket {
            amps: self.amps.iter().zip(&other.amps).map(|(a, b)| a + b).collect(),
            shape: self.shape.clone(),
        })
    }

    pub fn sub(&self, other: &Ket) -> Result<Ket> {
        check_dims(self.dim(), other.dim())?;
        Ok(Ket {
            amps: self.amps.iter().zip(&other.amps).map(|(a, b)| a - b).collect(),
            shape: self.shape.clone(),
        })
    }

    /// Euclidean distance `‖self − other‖`.
    pub fn distance(&self, other: &Ket) -> Result<f64> {
        check_dims(self.dim(), other.dim())?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt())
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Ket) -> Ket {
        let mut amps = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.amps {
            amps.extend(other.amps.iter().map(|b| a * b));
        }
        Ket {
            amps,
            shape: self.shape.concat(&other.shape),
        }
    }

    /// Same amplitudes, reinterpreted under a shape of equal total dimension.
    pub fn reshape(&self, shape: SpaceShape) -> Result<Ket> {
        Ket::from_amplitudes(self.amps.clone(), shape)
    }
}

pub(crate) fn check_dims(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::DimensionMismatch { left, right });
    }
    Ok(())
}

pub fn ket_from_amplitudes(amps: Vec<C64>, shape: SpaceShape) -> Result<Ket> {
    Ket::from_amplitudes(amps, shape)
}

pub fn inner(a: &Ket, b: &Ket) -> Result<C64> {
    a.inner(b)
}

pub fn normalize(a: &Ket) -> Result<Ket> {
    a.normalize()
}

/// Kronecker product of the parts in order.
pub fn tensor(parts: &[Ket]) -> Result<Ket> {
    let (first, rest) = parts.split_first().ok_or(Error::EmptyList)?;
    Ok(rest.iter().fold(first.clone(), |acc, k| acc.kron(k)))
}

/// `Σ cᵢ·kᵢ` over kets of one dimension; the shape of the first ket is kept.
pub fn linear_combination(terms: &[(C64, &Ket)]) -> Result<Ket> {
    let ((c0, k0), rest) = terms.split_first().ok_or(Error::EmptyList)?;
    let mut acc = k0.scale(*c0);
    for (c, k) in rest {
        check_dims(acc.dim(), k.dim())?;
        for (a, b) in acc.amps.iter_mut().zip(&k.amps) {
            *a += c * b;
        }
    }
    Ok(acc)
}

/// `|⟨a|b⟩|²` for normalized inputs.
pub fn fidelity(a: &Ket, b: &Ket) -> Result<f64> {
    for k in [a, b] {
        if !k.is_normalized(DEFAULT_TOL) {
            return Err(Error::NotNormalized { norm: k.norm() });
        }
    }
    Ok(a.inner(b)?.norm_sqr().min(1.0))
}

/// Checks `|alpha|² + |beta|² = 1` within `tol`.
pub fn check_coefficients(alpha: C64, beta: C64, tol: f64) -> Result<()> {
    let sum = alpha.norm_sqr() + beta.norm_sqr();
    if (sum - 1.0).abs() >= tol {
        return Err(Error::UnnormalizedCoefficients { sum });
    }
    Ok(())
}

/// Uniformly distributed unit vector in `C^dim`, seeded.
pub fn haar_random_ket(dim: usize, seed: u64) -> Ket {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    haar_random_ket_with(dim, &mut rng)
}

/// Draws independent standard-normal real and imaginary parts and normalizes.
pub fn haar_random_ket_with<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Ket {
    assert!(dim >= 1, "dimension must be positive");
    loop {
        let amps: Vec<C64> = (0..dim)
            .map(|_| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        let ket = Ket {
            amps,
            shape: SpaceShape { dims: vec![dim] },
        };
        // a zero draw has probability zero, but redraw rather than fail
        if let Ok(k) = ket.normalize() {
            return k;
        }
    }
}

/// Uniformly random normalized `(alpha, beta)`.
pub fn haar_random_coefficients<R: Rng + ?Sized>(rng: &mut R) -> (C64, C64) {
    let k = haar_random_ket_with(2, rng);
    (k.amps[0], k.amps[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn from_amplitudes_checks_length() {
        let h = Ket::from_real(&[1.0, 0.0], SpaceShape::qubit()).unwrap();
        assert_eq!(h, Ket::h());
        let s = Ket::from_real(&[FRAC_1_SQRT_2, FRAC_1_SQRT_2], SpaceShape::qubit()).unwrap();
        assert_eq!(s, Ket::plus());
        let six = SpaceShape::new(vec![2, 3]).unwrap();
        let k = Ket::from_real(&[1.0, 0.0, 0.0, 0.0, 0.0, 0.0], six).unwrap();
        assert_eq!(k.dim(), 6);
        assert_eq!(
            Ket::from_real(&[1.0, 0.0, 0.0], SpaceShape::qubit()),
            Err(Error::ShapeMismatch { expected: 2, got: 3 })
        );
    }

    #[test]
    fn no_implicit_normalization() {
        let k = Ket::from_real(&[2.0, 0.0], SpaceShape::qubit()).unwrap();
        assert_eq!(k.norm(), 2.0);
        assert!(!k.is_normalized(DEFAULT_TOL));
    }

    #[test]
    fn shape_rejects_zero_and_empty() {
        assert_eq!(
            SpaceShape::new(vec![2, 0]),
            Err(Error::InvalidFactorDim { index: 1, dim: 0 })
        );
        assert_eq!(SpaceShape::new(vec![]), Err(Error::EmptyShape));
        let s = SpaceShape::new(vec![2, 3, 1]).unwrap();
        assert_eq!(s.total_dim(), 6);
        assert_eq!(s.concat(&SpaceShape::qubit()).dims(), &[2, 3, 1, 2]);
    }

    #[test]
    fn inner_products() {
        assert_eq!(inner(&Ket::h(), &Ket::v()).unwrap(), ZERO);
        assert!(inner(&Ket::plus(), &Ket::minus()).unwrap().norm() < 1e-15);
        let ip = inner(&Ket::h(), &Ket::plus()).unwrap();
        assert!((ip - c(FRAC_1_SQRT_2)).norm() < 1e-15);
        let k3 = Ket::basis(SpaceShape::flat(3).unwrap(), 0).unwrap();
        assert!(matches!(
            inner(&Ket::h(), &k3),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn inner_is_conjugate_linear_in_first_argument() {
        let i = C64::new(0.0, 1.0);
        let a = Ket::h().scale(i);
        assert_eq!(inner(&a, &Ket::h()).unwrap(), -i);
        assert_eq!(inner(&Ket::h(), &a).unwrap(), i);
    }

    #[test]
    fn tensor_basis_and_distributivity() {
        let hhh = tensor(&[Ket::h(), Ket::h(), Ket::h()]).unwrap();
        assert_eq!(hhh, Ket::basis(SpaceShape::qubits(3), 0).unwrap());
        let s0 = tensor(&[Ket::plus(), Ket::h()]).unwrap();
        let s = FRAC_1_SQRT_2;
        assert_eq!(s0.amplitudes(), &[c(s), c(0.0), c(s), c(0.0)]);
        assert_eq!(s0.shape().dims(), &[2, 2]);
        assert_eq!(tensor(&[]), Err(Error::EmptyList));
    }

    #[test]
    fn tensor_is_big_endian() {
        // |HV⟩ is index 1, |VH⟩ is index 2
        let hv = tensor(&[Ket::h(), Ket::v()]).unwrap();
        let vh = tensor(&[Ket::v(), Ket::h()]).unwrap();
        assert_eq!(hv, Ket::basis(SpaceShape::qubits(2), 1).unwrap());
        assert_eq!(vh, Ket::basis(SpaceShape::qubits(2), 2).unwrap());
    }

    #[test]
    fn normalize_cases() {
        let k = Ket::from_real(&[2.0, 0.0], SpaceShape::qubit()).unwrap();
        assert_eq!(normalize(&k).unwrap(), Ket::h());
        let k = Ket::from_real(&[1.0, 1.0], SpaceShape::qubit()).unwrap();
        assert!(normalize(&k).unwrap().distance(&Ket::plus()).unwrap() < 1e-15);
        let z = Ket::from_real(&[1e-13, 0.0], SpaceShape::qubit()).unwrap();
        assert!(matches!(normalize(&z), Err(Error::DegenerateNorm { .. })));
    }

    #[test]
    fn fidelity_cases() {
        assert_eq!(fidelity(&Ket::h(), &Ket::h()).unwrap(), 1.0);
        assert_eq!(fidelity(&Ket::h(), &Ket::v()).unwrap(), 0.0);
        assert!((fidelity(&Ket::h(), &Ket::plus()).unwrap() - 0.5).abs() < 1e-15);
        let k = Ket::from_real(&[2.0, 0.0], SpaceShape::qubit()).unwrap();
        assert!(matches!(fidelity(&k, &Ket::h()), Err(Error::NotNormalized { .. })));
    }

    #[test]
    fn haar_dim_one_is_a_phase() {
        for seed in 0..10 {
            let k = haar_random_ket(1, seed);
            assert!((k.amplitude(0).norm() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn haar_is_deterministic() {
        assert_eq!(haar_random_ket(4, 7), haar_random_ket(4, 7));
        assert_ne!(haar_random_ket(4, 7), haar_random_ket(4, 8));
    }

    #[test]
    fn haar_population_mean_is_one_half() {
        // |alpha|² of a uniform qubit is uniform on [0, 1]
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let n = 1000;
        let mean: f64 = (0..n)
            .map(|_| haar_random_ket_with(2, &mut rng).amplitude(0).norm_sqr())
            .sum::<f64>()
            / n as f64;
        assert!((mean - 0.5).abs() < 0.05, "mean {mean}");
    }

    #[test]
    fn linear_combination_matches_manual() {
        let k = linear_combination(&[(c(1.0), &Ket::h()), (c(-1.0), &Ket::v())]).unwrap();
        assert_eq!(k.amplitudes(), &[c(1.0), c(-1.0)]);
    }

    #[test]
    fn coefficient_check() {
        assert!(check_coefficients(c(FRAC_1_SQRT_2), c(FRAC_1_SQRT_2), DEFAULT_TOL).is_ok());
        assert!(check_coefficients(c(1.0), c(1.0), DEFAULT_TOL).is_err());
    }
}
