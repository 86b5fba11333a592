//! Seeded random matrices and representations.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Field, Scalar};
use crate::matrices::{linalg, Matrix};
use crate::presentations::Representation;

/// Entries are drawn from `[-9, 9]` unless stated otherwise.
pub const DEFAULT_BOX: i64 = 9;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// A uniform entry of `[-bound, bound]`, reduced into `field`.
pub fn scalar(field: Field, bound: i64, rng: &mut ChaCha8Rng) -> Scalar {
    field.from_i64(rng.gen_range(-bound..=bound))
}

pub fn matrix(n: usize, field: Field, bound: i64, rng: &mut ChaCha8Rng) -> Matrix<Scalar> {
    Matrix::from_fn(n, n, |_, _| scalar(field, bound, rng))
}

/// Rejection-samples an invertible matrix.
pub fn invertible(n: usize, field: Field, bound: i64, rng: &mut ChaCha8Rng) -> Matrix<Scalar> {
    loop {
        let g = matrix(n, field, bound, rng);
        if linalg::rank(&g) == n {
            return g;
        }
    }
}

/// `s` independent random `n × n` images.
pub fn representation(
    n: usize,
    s: usize,
    field: Field,
    bound: i64,
    rng: &mut ChaCha8Rng,
) -> Representation {
    Representation::new((0..s).map(|_| matrix(n, field, bound, rng)).collect())
        .expect("square images of one size")
}
