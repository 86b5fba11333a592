//! Brute-force module theory used as ground truth: composition factors by
//! MeatAxe-style spinning, semisimplification comparison, Burnside
//! irreducibility and isomorphism testing.
//!
//! Nothing here uses characteristic polynomials of words as an invariant,
//! so it stays independent of the fingerprint code it is used to check.

mod factor;
mod meataxe;
pub mod upoly;

use crate::algebra::{Field, Scalar};
use crate::error::{Error, Result};
use crate::matrices::{linalg, solve_intertwiner, Matrix};
use crate::presentations::Representation;

pub use factor::irreducible_factors;
pub use meataxe::{find_submodule, Split};

/// Default seed for the randomized internals; results are deterministic.
pub const ORACLE_SEED: u64 = 0x5eed_0ac1e;

/// Jordan–Hölder factors up to isomorphism, with multiplicities. Factors
/// are irreducible over the field of the input (see [`burnside_irreducible`]
/// for the absolute notion).
#[derive(Clone, Debug)]
pub struct CompositionFactors {
    factors: Vec<(Representation, usize)>,
}

impl CompositionFactors {
    pub fn factors(&self) -> &[(Representation, usize)] {
        &self.factors
    }

    pub fn total_dim(&self) -> usize {
        self.factors.iter().map(|(r, k)| r.dim() * k).sum()
    }

    /// Factor dimensions with multiplicity, ascending.
    pub fn dims(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(r, k)| std::iter::repeat_n(r.dim(), *k))
            .collect();
        d.sort_unstable();
        d
    }

    /// Multiset equality up to isomorphism.
    pub fn matches(&self, other: &CompositionFactors) -> Result<bool> {
        if self.dims() != other.dims() || self.factors.len() != other.factors.len() {
            return Ok(false);
        }
        let mut used = vec![false; other.factors.len()];
        for (a, ka) in &self.factors {
            let mut found = false;
            for (j, (b, kb)) in other.factors.iter().enumerate() {
                if !used[j] && ka == kb && a.dim() == b.dim() && intertwined(a, b)? {
                    used[j] = true;
                    found = true;
                    break;
                }
            }
            if !found {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The semisimple module `⊕ factorᵏ` as one block-diagonal representation.
    pub fn semisimple(&self) -> Result<Representation> {
        let mut blocks = self
            .factors
            .iter()
            .flat_map(|(r, k)| std::iter::repeat_n(r, *k));
        let first = blocks.next().expect("at least one factor").clone();
        blocks.try_fold(first, |acc, r| acc.direct_sum(r))
    }
}

/// Nonzero intertwiner space between two irreducibles (hence isomorphic, by Schur).
fn intertwined(a: &Representation, b: &Representation) -> Result<bool> {
    Ok(!solve_intertwiner(a, b)?.is_empty())
}

pub fn composition_factors(rep: &Representation) -> Result<CompositionFactors> {
    composition_factors_seeded(rep, ORACLE_SEED)
}

pub fn composition_factors_seeded(rep: &Representation, seed: u64) -> Result<CompositionFactors> {
    check_scale(rep)?;
    let mut pieces = Vec::new();
    let mut stack = vec![rep.clone()];
    let mut round = 0u64;
    while let Some(r) = stack.pop() {
        round += 1;
        match find_submodule(&r, seed.wrapping_add(round))? {
            Split::Irreducible => pieces.push(r),
            Split::Reducible { sub, quotient } => {
                stack.push(quotient);
                stack.push(sub);
            }
        }
    }
    let mut factors: Vec<(Representation, usize)> = Vec::new();
    'next: for p in pieces {
        for (f, k) in factors.iter_mut() {
            if f.dim() == p.dim() && intertwined(f, &p)? {
                *k += 1;
                continue 'next;
            }
        }
        factors.push((p, 1));
    }
    Ok(CompositionFactors { factors })
}

fn check_scale(rep: &Representation) -> Result<()> {
    let limit = match rep.field() {
        Field::Rational => 3,
        Field::Prime(_) => 4,
    };
    if rep.dim() > limit {
        return Err(Error::GaveUp(format!(
            "dimension {} over {} is beyond the oracle's range",
            rep.dim(),
            rep.field()
        )));
    }
    Ok(())
}

/// True iff the two representations have isomorphic semisimplifications.
pub fn semisimplification_equal(a: &Representation, b: &Representation) -> Result<bool> {
    if a.generator_count() != b.generator_count() {
        return Err(Error::Dimension("generator counts differ".into()));
    }
    if a.field() != b.field() {
        return Err(Error::FieldMismatch {
            left: a.field(),
            right: b.field(),
        });
    }
    if a.dim() != b.dim() {
        return Ok(false);
    }
    composition_factors(a)?.matches(&composition_factors(b)?)
}

/// Absolute irreducibility: the images generate the full matrix algebra,
/// i.e. the span of all words has dimension `dim²`.
pub fn burnside_irreducible(rep: &Representation) -> bool {
    word_algebra_dim(rep) == rep.dim() * rep.dim()
}

/// Dimension of the algebra generated by the images (span of all words).
pub fn word_algebra_dim(rep: &Representation) -> usize {
    let n = rep.dim();
    let flat = |m: &Matrix<Scalar>| m.entries().to_vec();
    let mut span = linalg::Span::new(n * n);
    let id = rep.identity();
    span.insert(&flat(&id));
    // Breadth-first over words; a new word only matters if it enlarges the span.
    let mut frontier = vec![id];
    let mut length = 0;
    while !frontier.is_empty() && length < 2 * n * n {
        length += 1;
        let mut next = Vec::new();
        for m in &frontier {
            for g in rep.images() {
                let w = m.mul(g);
                if span.insert(&flat(&w)) {
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    span.dim()
}

/// Isomorphism of two irreducible representations via Schur's lemma.
pub fn isomorphic(a: &Representation, b: &Representation) -> Result<bool> {
    for r in [a, b] {
        if !is_irreducible(r)? {
            return Err(Error::Reducible);
        }
    }
    if a.dim() != b.dim() {
        return Ok(false);
    }
    intertwined(a, b)
}

/// Irreducibility over the representation's own field.
pub fn is_irreducible(rep: &Representation) -> Result<bool> {
    check_scale(rep)?;
    Ok(matches!(
        find_submodule(rep, ORACLE_SEED)?,
        Split::Irreducible
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::int_matrix;

    fn rep(field: Field, mats: &[&[&[i64]]]) -> Representation {
        Representation::new(mats.iter().map(|m| int_matrix(field, m)).collect()).unwrap()
    }

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    #[test]
    fn nilpotent_pair_has_two_zero_factors() {
        let r = rep(f5(), &[&[&[0, 1], &[0, 0]], &[&[0, 0], &[0, 0]]]);
        let cf = composition_factors(&r).unwrap();
        assert_eq!(cf.factors().len(), 1);
        let (f, k) = &cf.factors()[0];
        assert_eq!(*k, 2);
        assert!(f.images().iter().all(Matrix::is_zero));
    }

    #[test]
    fn pauli_pair_is_one_factor() {
        for field in [Field::Rational, f5()] {
            let r = rep(field, &[&[&[1, 0], &[0, -1]], &[&[0, 1], &[1, 0]]]);
            let cf = composition_factors(&r).unwrap();
            assert_eq!(cf.dims(), vec![2]);
            assert!(burnside_irreducible(&r));
            assert_eq!(word_algebra_dim(&r), 4);
        }
    }

    #[test]
    fn one_dimensional_rep_is_its_own_factor() {
        let r = rep(Field::Rational, &[&[&[3]], &[&[0]]]);
        let cf = composition_factors(&r).unwrap();
        assert_eq!(cf.dims(), vec![1]);
        assert_eq!(cf.factors()[0].0, r);
        assert!(burnside_irreducible(&r));
    }

    #[test]
    fn burnside_on_nilpotent_pair() {
        let r = rep(Field::Rational, &[&[&[0, 1], &[0, 0]], &[&[0, 0], &[0, 0]]]);
        assert!(!burnside_irreducible(&r));
        assert_eq!(word_algebra_dim(&r), 2);
    }

    #[test]
    fn semisimplification_examples() {
        let q = Field::Rational;
        let nil = rep(q, &[&[&[0, 1], &[0, 0]], &[&[0, 0], &[0, 0]]]);
        let zero = rep(q, &[&[&[0, 0], &[0, 0]], &[&[0, 0], &[0, 0]]]);
        let pauli = rep(q, &[&[&[1, 0], &[0, -1]], &[&[0, 1], &[1, 0]]]);
        assert!(semisimplification_equal(&nil, &zero).unwrap());
        assert!(!semisimplification_equal(&pauli, &zero).unwrap());
        let g = int_matrix(q, &[&[2, 1], &[1, 1]]);
        assert!(semisimplification_equal(&pauli, &pauli.conjugate(&g).unwrap()).unwrap());
    }

    #[test]
    fn isomorphism_examples() {
        let q = Field::Rational;
        let pauli = rep(q, &[&[&[1, 0], &[0, -1]], &[&[0, 1], &[1, 0]]]);
        let g = int_matrix(q, &[&[1, 1], &[0, 1]]);
        assert!(isomorphic(&pauli, &pauli.conjugate(&g).unwrap()).unwrap());
        let a = rep(q, &[&[&[3]], &[&[0]]]);
        let b = rep(q, &[&[&[5]], &[&[0]]]);
        assert!(!isomorphic(&a, &b).unwrap());
        assert!(!isomorphic(&pauli, &a).unwrap());
        let nil = rep(q, &[&[&[0, 1], &[0, 0]], &[&[0, 0], &[0, 0]]]);
        assert!(matches!(isomorphic(&nil, &nil), Err(Error::Reducible)));
    }

    #[test]
    fn field_irreducible_but_not_absolutely() {
        // x ↦ companion matrix of x^2 - 2 over F_5 (irreducible quadratic),
        // y ↦ 0: irreducible over F_5, splits over F_25.
        let r = rep(f5(), &[&[&[0, 2], &[1, 0]], &[&[0, 0], &[0, 0]]]);
        assert!(is_irreducible(&r).unwrap());
        assert!(!burnside_irreducible(&r));
        assert_eq!(composition_factors(&r).unwrap().dims(), vec![2]);
    }

    #[test]
    fn extension_splits_into_both_factors() {
        // Upper triangular with distinct diagonal characters.
        let q = Field::Rational;
        let r = rep(
            q,
            &[
                &[&[1, 1, 0], &[0, 2, 1], &[0, 0, 3]],
                &[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]],
            ],
        );
        let cf = composition_factors(&r).unwrap();
        assert_eq!(cf.dims(), vec![1, 1, 1]);
        let diag = rep(
            q,
            &[
                &[&[3, 0, 0], &[0, 1, 0], &[0, 0, 2]],
                &[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]],
            ],
        );
        assert!(semisimplification_equal(&r, &diag).unwrap());
    }
}
