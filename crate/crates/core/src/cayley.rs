//! Matrix algebras with a rescaled trace, the trace-defined characteristic
//! polynomial χ⁽ⁿ⁾, and the n-th Cayley–Hamilton identity.

use crate::algebra::{Field, Ring, Scalar};
use crate::error::{Error, Result};
use crate::matrices::{newton_elementary, CharPoly, Matrix};
use crate::sampling;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Elements {
    /// All `n × n` matrices, sampled with entries in `[-box, box]`.
    Full {
        entry_bound: i64,
    },
    /// The zero algebra.
    Zero,
    Explicit(Vec<Matrix<Scalar>>),
}

/// An algebra of `n × n` matrices placed `copies` times down the diagonal,
/// with `tr(r) = scale · trace(r)` on the ambient matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TracedModel {
    base: usize,
    copies: usize,
    field: Field,
    elements: Elements,
    scale: u64,
}

impl TracedModel {
    pub fn full(n: usize, field: Field) -> Self {
        TracedModel {
            base: n,
            copies: 1,
            field,
            elements: Elements::Full {
                entry_bound: sampling::DEFAULT_BOX,
            },
            scale: 1,
        }
    }

    pub fn zero(n: usize, field: Field) -> Self {
        TracedModel {
            elements: Elements::Zero,
            ..TracedModel::full(n, field)
        }
    }

    pub fn explicit(elements: Vec<Matrix<Scalar>>) -> Result<Self> {
        let first = elements
            .first()
            .ok_or_else(|| Error::Dimension("explicit model needs at least one element".into()))?;
        let (n, field) = (first.rows(), first.field());
        if elements
            .iter()
            .any(|m| !m.is_square() || m.rows() != n || m.field() != field)
        {
            return Err(Error::Dimension(
                "explicit elements must be square of one size over one field".into(),
            ));
        }
        Ok(TracedModel {
            base: n,
            copies: 1,
            field,
            elements: Elements::Explicit(elements),
            scale: 1,
        })
    }

    pub fn with_scale(mut self, scale: u64) -> Self {
        assert!(scale >= 1, "trace scale must be positive");
        self.scale = scale;
        self
    }

    pub fn with_entry_bound(mut self, bound: i64) -> Self {
        if let Elements::Full { entry_bound } = &mut self.elements {
            *entry_bound = bound;
        }
        self
    }

    pub fn ambient(&self) -> usize {
        self.base * self.copies
    }

    pub fn copies(&self) -> usize {
        self.copies
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn scale(&self) -> u64 {
        self.scale
    }

    pub fn elements(&self) -> &Elements {
        &self.elements
    }

    fn embed(&self, r: Matrix<Scalar>) -> Matrix<Scalar> {
        if self.copies == 1 {
            r
        } else {
            Matrix::block_diagonal(&vec![r; self.copies])
        }
    }

    /// `count` elements, reproducible from `seed`. Explicit lists are cycled.
    pub fn sample(&self, count: usize, seed: u64) -> Vec<Matrix<Scalar>> {
        let mut rng = sampling::rng(seed);
        (0..count)
            .map(|k| {
                let r = match &self.elements {
                    Elements::Full { entry_bound } => {
                        sampling::matrix(self.base, self.field, *entry_bound, &mut rng)
                    }
                    Elements::Zero => Matrix::zeros(self.base, self.base, &self.field.zero()),
                    Elements::Explicit(list) => list[k % list.len()].clone(),
                };
                self.embed(r)
            })
            .collect()
    }

    pub fn trace(&self, r: &Matrix<Scalar>) -> Scalar {
        r.trace().mul(&self.field.from_i64(self.scale as i64))
    }

    /// `tr(r)` as an element of the algebra.
    pub fn trace_element(&self, r: &Matrix<Scalar>) -> Matrix<Scalar> {
        Matrix::identity(r.rows(), &self.field.one()).scale(&self.trace(r))
    }

    /// Block embedding into `p` diagonal copies. The ambient trace keeps
    /// its scale, so the trace of an original element is multiplied by `p`.
    pub fn block_embed(&self, p: usize) -> TracedModel {
        assert!(p >= 1, "block embedding needs p ≥ 1");
        TracedModel {
            copies: self.copies * p,
            ..self.clone()
        }
    }
}

/// `χ_r⁽ⁿ⁾`: the monic degree-n polynomial whose roots have power sums
/// `tr(r), tr(r²), …, tr(rⁿ)`.
pub fn chi_poly(model: &TracedModel, r: &Matrix<Scalar>, n: usize) -> Result<CharPoly<Scalar>> {
    let field = model.field();
    if !field.inverts_up_to(n) {
        return Err(Error::UnsupportedCharacteristic {
            what: "the Cayley–Hamilton polynomial",
            bound: n,
            field,
        });
    }
    let mut power = r.clone();
    let mut sums = Vec::with_capacity(n);
    for j in 1..=n {
        if j > 1 {
            power = power.mul(r);
        }
        sums.push(model.trace(&power));
    }
    newton_elementary(&sums, field)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChReport {
    pub n: usize,
    pub checked: usize,
    pub counterexample: Option<Matrix<Scalar>>,
}

impl ChReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Substitutes sampled elements into their own `χ⁽ⁿ⁾`; stops at the first
/// nonzero result.
pub fn ch_check(model: &TracedModel, n: usize, samples: usize, seed: u64) -> Result<ChReport> {
    let mut checked = 0;
    for r in model.sample(samples, seed) {
        checked += 1;
        if !chi_poly(model, &r, n)?.eval_matrix(&r).is_zero() {
            return Ok(ChReport {
                n,
                checked,
                counterexample: Some(r),
            });
        }
    }
    Ok(ChReport {
        n,
        checked,
        counterexample: None,
    })
}

/// Checks `tr(a)b = b tr(a)`, `tr(ab) = tr(ba)` and `tr(tr(a)b) = tr(a)tr(b)`
/// on sampled pairs; returns the first failing pair.
pub fn check_trace_axioms(
    model: &TracedModel,
    pairs: usize,
    seed: u64,
) -> Option<(Matrix<Scalar>, Matrix<Scalar>)> {
    let xs = model.sample(2 * pairs, seed);
    xs.chunks(2)
        .find(|pair| {
            let (a, b) = (&pair[0], &pair[1]);
            let ta = model.trace_element(a);
            ta.mul(b) != b.mul(&ta)
                || model.trace(&a.mul(b)) != model.trace(&b.mul(a))
                || model.trace(&ta.mul(b)) != model.trace(a).mul(&model.trace(b))
        })
        .map(|pair| (pair[0].clone(), pair[1].clone()))
}
