//! Partially specified maps: Gram feasibility and unitary completion.
//!
//! A list of pairs `xᵢ → yᵢ` extends to a unitary exactly when
//! `⟨xᵢ|xⱼ⟩ = ⟨yᵢ|yⱼ⟩` for all `i, j`. Numerically the inputs are
//! orthonormalized by modified Gram–Schmidt (two passes per vector), the same
//! combination coefficients are applied to the outputs, and both families are
//! extended with canonical basis vectors, lowest index first.

use crate::error::{Error, Result};
use crate::hilbert::{check_dims, Ket, SpaceShape, C64, DEGENERATE_NORM, ONE, ZERO};

use super::Operator;

/// Canonical vectors whose residual falls below this are skipped during
/// basis extension. Any value below `1/√n` guarantees a full basis.
const EXTENSION_THRESHOLD: f64 = 1e-6;

/// Ordered `(input → output)` constraints on one space.
#[derive(Debug, Clone, PartialEq)]
pub struct PartialMapSpec {
    pairs: Vec<(Ket, Ket)>,
    shape: SpaceShape,
}

impl PartialMapSpec {
    pub fn new(shape: SpaceShape, pairs: Vec<(Ket, Ket)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::EmptyList);
        }
        let n = shape.total_dim();
        for (x, y) in &pairs {
            check_dims(n, x.dim())?;
            check_dims(n, y.dim())?;
        }
        if pairs.iter().all(|(x, _)| x.norm() <= DEGENERATE_NORM) {
            return Err(Error::DegenerateInputs);
        }
        Ok(PartialMapSpec { pairs, shape })
    }

    pub fn pairs(&self) -> &[(Ket, Ket)] {
        &self.pairs
    }

    pub fn shape(&self) -> &SpaceShape {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Largest `‖U·xᵢ − yᵢ‖` over the pairs.
    pub fn max_pair_residual(&self, u: &Operator) -> Result<f64> {
        let mut worst: f64 = 0.0;
        for (x, y) in &self.pairs {
            worst = worst.max(u.apply(x)?.distance(y)?);
        }
        Ok(worst)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GramReport {
    pub feasible: bool,
    pub input_gram: Vec<Vec<C64>>,
    pub output_gram: Vec<Vec<C64>>,
    /// Largest entrywise `|input_gram − output_gram|`.
    pub max_residual: f64,
    /// Largest output residual left over by an input that was numerically
    /// dependent on earlier inputs. Zero when the inputs are independent.
    pub dependency_residual: f64,
    /// Numerical rank of the inputs.
    pub rank: usize,
}

pub fn gram_feasibility(spec: &PartialMapSpec, tol: f64) -> GramReport {
    let gram = |pick: fn(&(Ket, Ket)) -> &Ket| -> Vec<Vec<C64>> {
        spec.pairs
            .iter()
            .map(|a| {
                spec.pairs
                    .iter()
                    .map(|b| dot(pick(a).amplitudes(), pick(b).amplitudes()))
                    .collect()
            })
            .collect()
    };
    let input_gram = gram(|p| &p.0);
    let output_gram = gram(|p| &p.1);
    let max_residual = input_gram
        .iter()
        .flatten()
        .zip(output_gram.iter().flatten())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);

    let family = orthonormalize_pairs(&spec.pairs);
    GramReport {
        feasible: max_residual < tol && family.dependency_residual < tol,
        input_gram,
        output_gram,
        max_residual,
        dependency_residual: family.dependency_residual,
        rank: family.inputs.len(),
    }
}

/// Builds a unitary `U` with `U·xᵢ = yᵢ` for every pair.
///
/// Deterministic: the free part of `U` comes from extending both families with
/// canonical basis vectors in index order. The result is verified before it
/// is returned.
pub fn complete_to_unitary(spec: &PartialMapSpec, tol: f64) -> Result<Operator> {
    let report = gram_feasibility(spec, tol);
    if !report.feasible {
        return Err(Error::Infeasible {
            gram_residual: report.max_residual,
            dependency_residual: report.dependency_residual,
        });
    }

    let n = spec.shape.total_dim();
    let Family {
        inputs: mut ins,
        outputs,
        ..
    } = orthonormalize_pairs(&spec.pairs);

    // The images agree with the inputs' geometry only to within `tol`;
    // re-orthonormalizing keeps U exactly unitary.
    let mut outs: Vec<Vec<C64>> = Vec::with_capacity(outputs.len());
    for f in outputs {
        let mut r = f;
        project_out(&mut r, &outs);
        let norm = norm(&r);
        if norm <= DEGENERATE_NORM {
            return Err(Error::CompletionFailed {
                what: "output family rank",
                deviation: norm,
            });
        }
        scale(&mut r, 1.0 / norm);
        outs.push(r);
    }

    extend_to_basis(&mut ins, n);
    extend_to_basis(&mut outs, n);
    if ins.len() != n || outs.len() != n {
        return Err(Error::CompletionFailed {
            what: "basis extension",
            deviation: (n - ins.len().min(outs.len())) as f64,
        });
    }

    let u = Operator::from_outer_products(spec.shape.clone(), &outs, &ins);

    let (unitary, deviation) = u.is_unitary(tol);
    if !unitary {
        return Err(Error::CompletionFailed {
            what: "unitarity deviation",
            deviation,
        });
    }
    let residual = spec.max_pair_residual(&u)?;
    if residual >= tol {
        return Err(Error::CompletionFailed {
            what: "constraint residual",
            deviation: residual,
        });
    }
    Ok(u)
}

struct Family {
    inputs: Vec<Vec<C64>>,
    outputs: Vec<Vec<C64>>,
    dependency_residual: f64,
}

/// Modified Gram–Schmidt over the inputs, mirrored on the outputs.
///
/// Each accepted `eₖ` is a combination of inputs; `fₖ` is the same
/// combination of outputs, so a linear map sending `xᵢ → yᵢ` sends `eₖ → fₖ`.
fn orthonormalize_pairs(pairs: &[(Ket, Ket)]) -> Family {
    let mut inputs: Vec<Vec<C64>> = Vec::new();
    let mut outputs: Vec<Vec<C64>> = Vec::new();
    let mut dependency_residual: f64 = 0.0;

    for (x, y) in pairs {
        let mut r = x.amplitudes().to_vec();
        let mut s = y.amplitudes().to_vec();
        for _pass in 0..2 {
            for (e, f) in inputs.iter().zip(&outputs) {
                let p = dot(e, &r);
                axpy(&mut r, -p, e);
                axpy(&mut s, -p, f);
            }
        }
        let rn = norm(&r);
        if rn < DEGENERATE_NORM {
            dependency_residual = dependency_residual.max(norm(&s));
            continue;
        }
        scale(&mut r, 1.0 / rn);
        scale(&mut s, 1.0 / rn);
        inputs.push(r);
        outputs.push(s);
    }

    Family {
        inputs,
        outputs,
        dependency_residual,
    }
}

fn extend_to_basis(basis: &mut Vec<Vec<C64>>, n: usize) {
    for k in 0..n {
        if basis.len() == n {
            break;
        }
        let mut v = vec![ZERO; n];
        v[k] = ONE;
        project_out(&mut v, basis);
        let vn = norm(&v);
        if vn > EXTENSION_THRESHOLD {
            scale(&mut v, 1.0 / vn);
            basis.push(v);
        }
    }
}

/// Removes the components of `v` along an orthonormal family, twice.
fn project_out(v: &mut [C64], basis: &[Vec<C64>]) {
    for _pass in 0..2 {
        for e in basis {
            let p = dot(e, v);
            axpy(v, -p, e);
        }
    }
}

fn dot(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

fn axpy(y: &mut [C64], a: C64, x: &[C64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += a * xi;
    }
}

fn norm(v: &[C64]) -> f64 {
    v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

fn scale(v: &mut [C64], s: f64) {
    for x in v {
        *x *= s;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::{tensor, DEFAULT_TOL};
    use std::f64::consts::FRAC_1_SQRT_2;

    fn q() -> SpaceShape {
        SpaceShape::qubit()
    }

    #[test]
    fn permutation_spec_is_feasible() {
        let spec = PartialMapSpec::new(q(), vec![(Ket::h(), Ket::v()), (Ket::v(), Ket::h())]).unwrap();
        let r = gram_feasibility(&spec, DEFAULT_TOL);
        assert!(r.feasible);
        assert_eq!(r.max_residual, 0.0);
        assert_eq!(r.rank, 2);

        let u = complete_to_unitary(&spec, DEFAULT_TOL).unwrap();
        let x = super::super::pauli_x();
        assert!(u.max_abs_diff(&x).unwrap() < 1e-15);
    }

    #[test]
    fn overlap_mismatch_is_infeasible() {
        // ⟨H|+⟩ = 1/√2 but ⟨H|V⟩ = 0
        let spec = PartialMapSpec::new(q(), vec![(Ket::h(), Ket::h()), (Ket::plus(), Ket::v())]).unwrap();
        let r = gram_feasibility(&spec, DEFAULT_TOL);
        assert!(!r.feasible);
        assert!((r.max_residual - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!(matches!(
            complete_to_unitary(&spec, DEFAULT_TOL),
            Err(Error::Infeasible { .. })
        ));
    }

    #[test]
    fn single_constraint_completion() {
        let spec = PartialMapSpec::new(q(), vec![(Ket::h(), Ket::h())]).unwrap();
        let u = complete_to_unitary(&spec, DEFAULT_TOL).unwrap();
        assert_eq!(u.apply(&Ket::h()).unwrap(), Ket::h());
        assert!(u.is_unitary(1e-15).0);
    }

    #[test]
    fn dependent_inputs_with_matching_outputs() {
        let pairs = vec![
            (Ket::h(), Ket::v()),
            (Ket::v(), Ket::h()),
            (Ket::plus(), Ket::plus()),
            (Ket::h().scale(C64::new(2.0, 0.0)), Ket::v().scale(C64::new(2.0, 0.0))),
        ];
        let spec = PartialMapSpec::new(q(), pairs).unwrap();
        let r = gram_feasibility(&spec, DEFAULT_TOL);
        assert!(r.feasible, "{r:?}");
        assert_eq!(r.rank, 2);
        let u = complete_to_unitary(&spec, DEFAULT_TOL).unwrap();
        assert!(spec.max_pair_residual(&u).unwrap() < 1e-14);
    }

    #[test]
    fn zero_input_with_nonzero_output_is_infeasible() {
        let zero = Ket::from_real(&[0.0, 0.0], q()).unwrap();
        let spec = PartialMapSpec::new(q(), vec![(Ket::h(), Ket::h()), (zero, Ket::v())]).unwrap();
        let r = gram_feasibility(&spec, DEFAULT_TOL);
        assert!(!r.feasible);
        assert_eq!(r.dependency_residual, 1.0);
    }

    #[test]
    fn spec_validation() {
        assert_eq!(PartialMapSpec::new(q(), vec![]), Err(Error::EmptyList));
        let zero = Ket::from_real(&[0.0, 0.0], q()).unwrap();
        assert_eq!(
            PartialMapSpec::new(q(), vec![(zero.clone(), zero)]),
            Err(Error::DegenerateInputs)
        );
        let big = tensor(&[Ket::h(), Ket::h()]).unwrap();
        assert!(matches!(
            PartialMapSpec::new(q(), vec![(big, Ket::h())]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn extension_is_lowest_index_first() {
        // fixing |1⟩ on a qutrit leaves |0⟩ and |2⟩ as the free completion
        let shape = SpaceShape::flat(3).unwrap();
        let b = |i| Ket::basis(shape.clone(), i).unwrap();
        let spec = PartialMapSpec::new(shape.clone(), vec![(b(1), b(1))]).unwrap();
        let u = complete_to_unitary(&spec, DEFAULT_TOL).unwrap();
        assert_eq!(u, Operator::identity(shape));
    }
}
