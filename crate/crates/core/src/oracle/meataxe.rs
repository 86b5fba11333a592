//! Invariant-subspace search with Norton's irreducibility certificate.

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::factor::irreducible_factors;
use super::upoly::UPoly;
use crate::algebra::{Field, Ring, Scalar};
use crate::error::{Error, Result};
use crate::matrices::linalg::{self, Span, Vector};
use crate::matrices::Matrix;
use crate::presentations::Representation;

const ATTEMPTS: usize = 64;

#[derive(Clone, Debug)]
pub enum Split {
    Irreducible,
    Reducible {
        sub: Representation,
        quotient: Representation,
    },
}

fn random_scalar(field: Field, rng: &mut ChaCha8Rng) -> Scalar {
    match field {
        Field::Rational => field.from_i64(rng.gen_range(-3..=3)),
        Field::Prime(p) => field.from_i64(rng.gen_range(0..p) as i64),
    }
}

/// A random element of the algebra spanned by words of length ≤ 2.
fn random_element(rep: &Representation, rng: &mut ChaCha8Rng) -> Matrix<Scalar> {
    let field = rep.field();
    let gens = rep.images();
    let mut acc = rep.identity().scale(&random_scalar(field, rng));
    for g in gens {
        acc = acc.add(&g.scale(&random_scalar(field, rng)));
    }
    for a in gens {
        for b in gens {
            let c = random_scalar(field, rng);
            if !c.is_zero() && rng.gen_bool(0.5) {
                acc = acc.add(&a.mul(b).scale(&c));
            }
        }
    }
    acc
}

/// Splits `rep` along a proper invariant subspace, or certifies that none
/// exists. Irreducibility is relative to the representation's field.
pub fn find_submodule(rep: &Representation, seed: u64) -> Result<Split> {
    let n = rep.dim();
    if n == 1 {
        return Ok(Split::Irreducible);
    }
    let field = rep.field();
    let gens = rep.images();
    let transposed: Vec<Matrix<Scalar>> = gens.iter().map(Matrix::transpose).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        let a = random_element(rep, &mut rng);
        let cp = UPoly::from_charpoly(field, &a.charpoly()?);
        let factors = match irreducible_factors(&cp, &mut rng) {
            Ok(f) => f,
            Err(Error::GaveUp(_)) => continue,
            Err(e) => return Err(e),
        };
        for f in factors {
            let fa = f.eval_matrix(&a);
            let kernel = linalg::nullspace(&fa);
            for v in &kernel {
                let span = linalg::spin(std::slice::from_ref(v), gens);
                if span.dim() < n {
                    return split_along(rep, span.basis());
                }
            }
            if kernel.len() == f.degree() {
                let cokernel = linalg::nullspace(&fa.transpose());
                let dual = linalg::spin(&cokernel[..1], &transposed);
                if dual.dim() < n {
                    let annihilator = annihilator(&dual);
                    return split_along(rep, &annihilator);
                }
                return Ok(Split::Irreducible);
            }
        }
    }
    Err(Error::GaveUp(format!(
        "no submodule or irreducibility certificate after {ATTEMPTS} random elements"
    )))
}

/// `{ u : ⟨u, s⟩ = 0 for all s in span }`.
fn annihilator(span: &Span) -> Vec<Vector> {
    let n = span.ambient_dim();
    let rows = span.basis();
    let m = Matrix::from_fn(rows.len(), n, |i, j| rows[i][j].clone());
    linalg::nullspace(&m)
}

/// Change of basis putting the invariant subspace spanned by `basis` first;
/// the images become block upper triangular.
fn split_along(rep: &Representation, basis: &[Vector]) -> Result<Split> {
    let n = rep.dim();
    let k = basis.len();
    let field = rep.field();
    let mut span = Span::new(n);
    let mut columns: Vec<Vector> = Vec::with_capacity(n);
    for b in basis {
        if span.insert(b) {
            columns.push(b.clone());
        }
    }
    for i in 0..n {
        let e: Vector = (0..n)
            .map(|j| if i == j { field.one() } else { field.zero() })
            .collect();
        if span.insert(&e) {
            columns.push(e);
        }
    }
    let p = Matrix::from_fn(n, n, |i, j| columns[j][i].clone());
    let pinv = linalg::inverse(&p)?;
    let conj: Vec<Matrix<Scalar>> = rep.images().iter().map(|m| pinv.mul(m).mul(&p)).collect();
    debug_assert!(conj
        .iter()
        .all(|m| (k..n).all(|i| (0..k).all(|j| m[(i, j)].is_zero()))));
    let sub = conj
        .iter()
        .map(|m| Matrix::from_fn(k, k, |i, j| m[(i, j)].clone()))
        .collect();
    let quotient = conj
        .iter()
        .map(|m| Matrix::from_fn(n - k, n - k, |i, j| m[(k + i, k + j)].clone()))
        .collect();
    Ok(Split::Reducible {
        sub: Representation::new(sub)?,
        quotient: Representation::new(quotient)?,
    })
}
