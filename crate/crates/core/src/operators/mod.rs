//! Dense operators on composite spaces.

mod gates;
mod partial;

pub use gates::{acts_as_swap_on, cnot, pauli_x, rotation_to_basis, swap_factors, Bit, SwapCheck};
pub use partial::{complete_to_unitary, gram_feasibility, GramReport, PartialMapSpec};

use crate::error::{Error, Result};
use crate::hilbert::{check_dims, Ket, SpaceShape, C64, ONE, ZERO};

/// Square complex matrix acting on `shape`, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Operator {
    data: Vec<C64>,
    shape: SpaceShape,
}

impl Operator {
    pub fn from_matrix(data: Vec<C64>, shape: SpaceShape) -> Result<Self> {
        let side = shape.total_dim();
        if data.len() != side * side {
            return Err(Error::NotSquare {
                len: data.len(),
                side,
            });
        }
        Ok(Operator { data, shape })
    }

    pub fn from_fn(shape: SpaceShape, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let n = shape.total_dim();
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Operator { data, shape }
    }

    pub fn identity(shape: SpaceShape) -> Self {
        Self::from_fn(shape, |i, j| if i == j { ONE } else { ZERO })
    }

    pub fn diagonal(entries: &[C64], shape: SpaceShape) -> Result<Self> {
        check_dims(entries.len(), shape.total_dim())?;
        Ok(Self::from_fn(shape, |i, j| if i == j { entries[i] } else { ZERO }))
    }

    /// `Σ |outₖ⟩⟨inₖ|`
    pub(crate) fn from_outer_products(shape: SpaceShape, outs: &[Vec<C64>], ins: &[Vec<C64>]) -> Self {
        let n = shape.total_dim();
        let mut data = vec![ZERO; n * n];
        for (out, inp) in outs.iter().zip(ins) {
            for (i, o) in out.iter().enumerate() {
                if *o == ZERO {
                    continue;
                }
                let row = &mut data[i * n..(i + 1) * n];
                for (r, x) in row.iter_mut().zip(inp) {
                    *r += o * x.conj();
                }
            }
        }
        Operator { data, shape }
    }

    pub fn dim(&self) -> usize {
        self.shape.total_dim()
    }

    pub fn shape(&self) -> &SpaceShape {
        &self.shape
    }

    pub fn matrix(&self) -> &[C64] {
        &self.data
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.data[row * self.dim() + col]
    }

    pub fn apply(&self, x: &Ket) -> Result<Ket> {
        let n = self.dim();
        check_dims(n, x.dim())?;
        let amps = self
            .data
            .chunks_exact(n)
            .map(|row| row.iter().zip(x.amplitudes()).map(|(a, b)| a * b).sum())
            .collect();
        Ket::from_amplitudes(amps, self.shape.clone())
    }

    /// Matrix product `self · other`: `other` acts first.
    pub fn compose(&self, other: &Operator) -> Result<Operator> {
        let n = self.dim();
        check_dims(n, other.dim())?;
        let mut data = vec![ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        Ok(Operator {
            data,
            shape: self.shape.clone(),
        })
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Operator {
        let n = self.dim();
        Self::from_fn(self.shape.clone(), |i, j| self.data[j * n + i].conj())
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Operator) -> Operator {
        let (n, m) = (self.dim(), other.dim());
        Self::from_fn(self.shape.concat(&other.shape), |i, j| {
            self.data[(i / m) * n + j / m] * other.data[(i % m) * m + j % m]
        })
    }

    /// Returns `(unitary, deviation)` where deviation is the largest entry of `|U†U − I|`.
    pub fn is_unitary(&self, tol: f64) -> (bool, f64) {
        let n = self.dim();
        let mut deviation: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let mut s = ZERO;
                for k in 0..n {
                    s += self.data[k * n + i].conj() * self.data[k * n + j];
                }
                if i == j {
                    s -= ONE;
                }
                deviation = deviation.max(s.norm());
            }
        }
        (deviation < tol, deviation)
    }

    /// Largest entrywise `|self − other|`.
    pub fn max_abs_diff(&self, other: &Operator) -> Result<f64> {
        check_dims(self.dim(), other.dim())?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// Exactly one entry equal to 1 per row and column, all others exactly 0.
    pub fn is_permutation(&self) -> bool {
        let n = self.dim();
        let mut col_hits = vec![0usize; n];
        for row in self.data.chunks_exact(n) {
            let mut hits = 0;
            for (j, &x) in row.iter().enumerate() {
                if x == ONE {
                    hits += 1;
                    col_hits[j] += 1;
                } else if x != ZERO {
                    return false;
                }
            }
            if hits != 1 {
                return false;
            }
        }
        col_hits.iter().all(|&c| c == 1)
    }
}

pub fn apply(u: &Operator, x: &Ket) -> Result<Ket> {
    u.apply(x)
}

pub fn compose(a: &Operator, b: &Operator) -> Result<Operator> {
    a.compose(b)
}

/// Kronecker product of the parts in factor order.
pub fn tensor_op(parts: &[Operator]) -> Result<Operator> {
    let (first, rest) = parts.split_first().ok_or(Error::EmptyList)?;
    Ok(rest.iter().fold(first.clone(), |acc, op| acc.kron(op)))
}

pub fn is_unitary(u: &Operator, tol: f64) -> (bool, f64) {
    u.is_unitary(tol)
}
