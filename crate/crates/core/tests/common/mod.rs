#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use uncopy::hilbert::haar_random_coefficients;
use uncopy::{Ket, Operator, SpaceShape, C64};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random unitary as a product of two-level rotations `[[a, −b̄], [b, ā]]`
/// with random phases. Unitary by construction, independent of the
/// completion code.
pub fn random_unitary<R: Rng>(shape: SpaceShape, rng: &mut R) -> Operator {
    let n = shape.total_dim();
    let mut m: Vec<C64> = (0..n * n)
        .map(|k| if k / n == k % n { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) })
        .collect();
    for _ in 0..(2 * n * n).max(4) {
        if n == 1 {
            break;
        }
        let i = rng.random_range(0..n);
        let mut j = rng.random_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let (a, b) = haar_random_coefficients(rng);
        let phase = C64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU));
        // left-multiply rows i and j
        for col in 0..n {
            let (x, y) = (m[i * n + col], m[j * n + col]);
            m[i * n + col] = phase * (a * x - b.conj() * y);
            m[j * n + col] = phase * (b * x + a.conj() * y);
        }
    }
    let phase = C64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU));
    for x in &mut m {
        *x *= phase;
    }
    Operator::from_matrix(m, shape).unwrap()
}

/// First `k` columns of a random unitary.
pub fn random_orthonormal_set<R: Rng>(shape: &SpaceShape, k: usize, rng: &mut R) -> Vec<Ket> {
    let u = random_unitary(shape.clone(), rng);
    (0..k)
        .map(|col| {
            let e = Ket::basis(shape.clone(), col).unwrap();
            u.apply(&e).unwrap()
        })
        .collect()
}

pub fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}
