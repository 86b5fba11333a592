//! Generic matrices, the universal evaluation `p ↦ p(X̂₁, …, X̂_s)`, and the
//! block-diagonal specializations between generic-matrix rings of sizes N and m.

use crate::algebra::{nc_eval, CPoly, CPolyVar, Field, NCPoly, Ring, Scalar};
use crate::error::{Error, Result};
use crate::matrices::Matrix;
use crate::presentations::Representation;

/// Default caps for symbolic work; beyond these only point evaluation is used.
pub const MAX_SYMBOLIC_SIZE: usize = 4;
pub const MAX_SYMBOLIC_GENERATORS: usize = 3;
pub const MAX_SYMBOLIC_WORD_LENGTH: usize = 4;

/// The `s` generic `n × n` matrices over `field`.
#[derive(Clone, Debug)]
pub struct GenericMatrixSpace {
    n: usize,
    field: Field,
    matrices: Vec<Matrix<CPoly>>,
}

impl GenericMatrixSpace {
    pub fn new(n: usize, s: usize, field: Field) -> Self {
        assert!(n >= 1 && s >= 1, "generic matrices need n ≥ 1 and s ≥ 1");
        let matrices = (1..=s)
            .map(|l| {
                Matrix::from_fn(n, n, |i, j| {
                    CPoly::var(field, CPolyVar::new(l, i + 1, j + 1, n))
                })
            })
            .collect();
        GenericMatrixSpace { n, field, matrices }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn generator_count(&self) -> usize {
        self.matrices.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn matrices(&self) -> &[Matrix<CPoly>] {
        &self.matrices
    }

    pub fn identity(&self) -> Matrix<CPoly> {
        Matrix::identity(self.n, &CPoly::one(self.field))
    }

    pub fn image(&self, p: &NCPoly) -> Result<Matrix<CPoly>> {
        nc_eval(p, &self.matrices, &self.identity())
    }
}

/// `p` evaluated at the generic `n × n` matrices.
pub fn generic_image(p: &NCPoly, n: usize, field: Field) -> Result<Matrix<CPoly>> {
    GenericMatrixSpace::new(n, p.arity().max(1), field).image(p)
}

/// The coordinates of a concrete representation, as a point for [`CPoly::eval`].
/// Variables of another size or beyond the generator count are errors.
pub fn point(rep: &Representation) -> impl Fn(&CPolyVar) -> Result<Scalar> + '_ {
    move |v| {
        if v.size != rep.dim() || v.gen > rep.generator_count() {
            return Err(Error::Dimension(format!(
                "coordinate {v} does not belong to a {}-dimensional representation with {} generators",
                rep.dim(),
                rep.generator_count()
            )));
        }
        Ok(rep.images()[v.gen - 1][(v.row - 1, v.col - 1)].clone())
    }
}

/// Block size `m` inside ambient size `N`, with `m | N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockSpec {
    m: usize,
    n: usize,
}

impl BlockSpec {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 || !n.is_multiple_of(m) {
            return Err(Error::BlockSize { m, n });
        }
        Ok(BlockSpec { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn copies(&self) -> usize {
        self.n / self.m
    }

    /// Whether the 1-based position `(i, j)` lies in a diagonal block.
    pub fn on_block(&self, i: usize, j: usize) -> bool {
        (i - 1) / self.m == (j - 1) / self.m
    }

    /// Where `(i, j)` lands inside its block.
    fn reduce(&self, i: usize, j: usize) -> (usize, usize) {
        ((i - 1) % self.m + 1, (j - 1) % self.m + 1)
    }

    /// Image of a size-N coordinate: its block-diagonal size-m counterpart, or 0.
    pub fn image_of(&self, v: &CPolyVar, field: Field) -> Result<CPoly> {
        if v.size != self.n {
            return Err(Error::Dimension(format!(
                "{v} is not a size-{} coordinate",
                self.n
            )));
        }
        if !self.on_block(v.row, v.col) {
            return Ok(CPoly::zero(field));
        }
        let (i, j) = self.reduce(v.row, v.col);
        Ok(CPoly::var(field, CPolyVar::new(v.gen, i, j, self.m)))
    }

    /// The `N × N` matrix with `N/m` copies of `block` down the diagonal.
    pub fn block_diagonal<R: Ring>(&self, block: &Matrix<R>) -> Result<Matrix<R>> {
        if block.rows() != self.m || block.cols() != self.m {
            return Err(Error::Dimension(format!(
                "expected a {0}×{0} block",
                self.m
            )));
        }
        Ok(Matrix::block_diagonal(&vec![block.clone(); self.copies()]))
    }
}

/// Substitutes every size-N coordinate by the matching entry of the
/// m-block-diagonal generic matrix.
pub fn specialize_block(c: &CPoly, spec: &BlockSpec) -> Result<CPoly> {
    let field = c.field();
    c.substitute(&|v| spec.image_of(v, field))
}

/// Generators of the kernel of [`specialize_block`] restricted to the given
/// generator indices: off-block coordinates, then differences of on-block
/// coordinates in congruent positions.
pub fn hm_generators(
    spec: &BlockSpec,
    gens: impl IntoIterator<Item = usize> + Clone,
    field: Field,
) -> Vec<CPoly> {
    let n = spec.ambient();
    let var = |l, i, j| CPoly::var(field, CPolyVar::new(l, i, j, n));
    let positions: Vec<(usize, usize)> =
        (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for l in gens.clone() {
        for &(i, j) in &positions {
            if !spec.on_block(i, j) {
                out.push(var(l, i, j));
            }
        }
    }
    for l in gens {
        let on: Vec<(usize, usize)> = positions
            .iter()
            .copied()
            .filter(|&(i, j)| spec.on_block(i, j))
            .collect();
        for (a, &(i, j)) in on.iter().enumerate() {
            for &(i2, j2) in &on[a + 1..] {
                if spec.reduce(i, j) == spec.reduce(i2, j2) {
                    out.push(var(l, i, j).sub(&var(l, i2, j2)));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Word;

    fn q() -> Field {
        Field::Rational
    }

    fn x(l: usize, i: usize, j: usize, n: usize) -> CPoly {
        CPoly::var(q(), CPolyVar::new(l, i, j, n))
    }

    fn commutator() -> NCPoly {
        let a = NCPoly::generator(q(), 1);
        let b = NCPoly::generator(q(), 2);
        a.try_mul(&b)
            .unwrap()
            .try_sub(&b.try_mul(&a).unwrap())
            .unwrap()
    }

    #[test]
    fn commutator_vanishes_on_one_by_one() {
        let m = generic_image(&commutator(), 1, q()).unwrap();
        assert!(m.is_zero());
    }

    #[test]
    fn generator_maps_to_generic_matrix() {
        let m = generic_image(&NCPoly::generator(q(), 1), 2, q()).unwrap();
        for i in 1..=2 {
            for j in 1..=2 {
                assert_eq!(m[(i - 1, j - 1)], x(1, i, j, 2));
            }
        }
        assert_eq!(m.trace(), x(1, 1, 1, 2).add(&x(1, 2, 2, 2)));
    }

    #[test]
    fn block_substitution_examples() {
        let spec = BlockSpec::new(1, 2).unwrap();
        assert_eq!(
            specialize_block(&x(1, 1, 1, 2), &spec).unwrap(),
            x(1, 1, 1, 1)
        );
        assert!(specialize_block(&x(1, 1, 2, 2), &spec).unwrap().is_zero());
        assert_eq!(
            specialize_block(&x(1, 2, 2, 2), &spec).unwrap(),
            x(1, 1, 1, 1)
        );
        let c2 = generic_image(&NCPoly::generator(q(), 1), 2, q())
            .unwrap()
            .charpoly()
            .unwrap()
            .coeffs()[1]
            .clone();
        assert_eq!(specialize_block(&c2, &spec).unwrap(), x(1, 1, 1, 1).pow(2));
    }

    #[test]
    fn full_block_is_identity() {
        let spec = BlockSpec::new(2, 2).unwrap();
        let c = x(1, 1, 2, 2).mul(&x(2, 2, 1, 2)).add(&x(1, 2, 2, 2));
        assert_eq!(specialize_block(&c, &spec).unwrap(), c);
        assert!(hm_generators(&spec, 1..=2, q()).is_empty());
    }

    #[test]
    fn block_size_must_divide() {
        assert!(matches!(
            BlockSpec::new(2, 3),
            Err(Error::BlockSize { m: 2, n: 3 })
        ));
    }

    #[test]
    fn hm_generators_for_scalar_blocks() {
        let spec = BlockSpec::new(1, 2).unwrap();
        let gens = hm_generators(&spec, 1..=1, q());
        assert_eq!(
            gens,
            vec![
                x(1, 1, 2, 2),
                x(1, 2, 1, 2),
                x(1, 1, 1, 2).sub(&x(1, 2, 2, 2))
            ]
        );
        for g in &gens {
            assert!(specialize_block(g, &spec).unwrap().is_zero());
        }
    }

    #[test]
    fn commuting_square_on_a_word() {
        let p = NCPoly::monomial(q().one(), Word::new(vec![1, 2, 1]))
            .try_add(&commutator())
            .unwrap();
        let spec = BlockSpec::new(2, 4).unwrap();
        let big = generic_image(&p, 4, q()).unwrap();
        let small = spec
            .block_diagonal(&generic_image(&p, 2, q()).unwrap())
            .unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(
                    specialize_block(&big[(i, j)], &spec).unwrap(),
                    small[(i, j)]
                );
            }
        }
    }
}
