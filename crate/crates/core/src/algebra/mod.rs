//! Exact coefficient arithmetic: scalars, commutative polynomials in
//! generic-matrix coordinates, and noncommutative free-algebra polynomials.

use std::fmt::Debug;

mod cpoly;
mod ncpoly;
mod scalar;

pub use cpoly::{CPoly, CPolyVar, Monomial};
pub use ncpoly::{nc_eval, NCPoly, Word};
pub use scalar::{Field, Scalar};

/// A commutative ring that is also an algebra over its scalar field.
///
/// Elements carry their own field, so `zero_like`/`one_like` build constants
/// of the same ring as `self`. Binary operations assume both operands come
/// from the same field and panic otherwise; the checked entry points on the
/// concrete types report mismatches as errors.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, c: &Scalar) -> Self;
    fn field(&self) -> Field;
}
