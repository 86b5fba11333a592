//! Finitely presented algebras, their concrete representations, and
//! quotient presentations.

use std::fmt;

use crate::algebra::{nc_eval, Field, NCPoly, Scalar, Word};
use crate::error::{Error, Result};
use crate::matrices::{linalg, Matrix};

mod parser;
mod repfile;

/// Generators and finitely many relations, plus an optional declared bound
/// on the dimension of irreducible representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    names: Vec<String>,
    relations: Vec<NCPoly>,
    bound: Option<usize>,
}

impl Presentation {
    pub fn new(names: Vec<String>, relations: Vec<NCPoly>, bound: Option<usize>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::Dimension("a presentation needs a generator".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::InvalidRepresentation(format!(
                    "duplicate generator name {n:?}"
                )));
            }
        }
        for r in &relations {
            if r.arity() > names.len() {
                return Err(Error::Arity {
                    index: r.arity(),
                    arity: names.len(),
                });
            }
        }
        Ok(Presentation {
            names,
            relations,
            bound,
        })
    }

    /// The free algebra on `s` generators named `x1..xs` (or `x, y, z` for s ≤ 3).
    pub fn free(s: usize) -> Self {
        let names = if s <= 3 {
            ["x", "y", "z"][..s].iter().map(|n| n.to_string()).collect()
        } else {
            (1..=s).map(|i| format!("x{i}")).collect()
        };
        Presentation::new(names, Vec::new(), None).expect("distinct names")
    }

    pub fn parse(text: &str) -> Result<Self> {
        parser::parse(text)
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relations(&self) -> &[NCPoly] {
        &self.relations
    }

    pub fn bound(&self) -> Option<usize> {
        self.bound
    }

    pub fn with_bound(mut self, d: usize) -> Self {
        self.bound = Some(d);
        self
    }

    /// Adds `extra` to the relations; representations of the result are
    /// exactly the representations of `self` that kill `extra`.
    pub fn quotient(&self, extra: &[NCPoly]) -> Result<Presentation> {
        let mut relations = self.relations.clone();
        relations.extend(extra.iter().cloned());
        Presentation::new(self.names.clone(), relations, self.bound)
    }

    /// Checks every relation against `rep`. Dimension above the declared
    /// bound is reported as an error, not a violation.
    pub fn validate(&self, rep: &Representation) -> Result<Validation> {
        if rep.generator_count() != self.generator_count() {
            return Err(Error::Dimension(format!(
                "presentation has {} generators, representation has {}",
                self.generator_count(),
                rep.generator_count()
            )));
        }
        if let Some(d) = self.bound {
            if rep.dim() > d {
                return Err(Error::Dimension(format!(
                    "representation dimension {} exceeds declared bound {d}",
                    rep.dim()
                )));
            }
        }
        let mut violations = Vec::new();
        for (index, rel) in self.relations.iter().enumerate() {
            let value = rep.eval(rel)?;
            if !value.is_zero() {
                violations.push(Violation { index, value });
            }
        }
        Ok(Validation { violations })
    }

    pub fn render_poly(&self, p: &NCPoly) -> String {
        p.render(&self.names)
    }
}

/// Canonical text form; parsing it back yields an equal presentation.
impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens {};", self.names.join(" "))?;
        if let Some(d) = self.bound {
            writeln!(f, "bound {d};")?;
        }
        for r in &self.relations {
            writeln!(f, "rel {};", r.render(&self.names))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub index: usize,
    pub value: Matrix<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Validation {
    pub violations: Vec<Violation>,
}

impl Validation {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// One square matrix per generator, all of one size over one field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation {
    dim: usize,
    field: Field,
    images: Vec<Matrix<Scalar>>,
}

impl Representation {
    pub fn new(images: Vec<Matrix<Scalar>>) -> Result<Self> {
        let first = images
            .first()
            .ok_or_else(|| Error::InvalidRepresentation("no generator images".into()))?;
        let (dim, field) = (first.rows(), first.field());
        for m in &images {
            if !m.is_square() || m.rows() != dim {
                return Err(Error::Dimension(format!(
                    "generator images must all be {dim}x{dim}"
                )));
            }
            if m.field() != field {
                return Err(Error::FieldMismatch {
                    left: field,
                    right: m.field(),
                });
            }
        }
        Ok(Representation { dim, field, images })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn generator_count(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Matrix<Scalar>] {
        &self.images
    }

    pub fn identity(&self) -> Matrix<Scalar> {
        Matrix::identity(self.dim, &self.field.one())
    }

    pub fn eval(&self, p: &NCPoly) -> Result<Matrix<Scalar>> {
        nc_eval(p, &self.images, &self.identity())
    }

    pub fn word_image(&self, w: &Word) -> Result<Matrix<Scalar>> {
        let mut acc = self.identity();
        for &g in w.letters() {
            let m = self.images.get(g - 1).ok_or(Error::Arity {
                index: g,
                arity: self.images.len(),
            })?;
            acc = acc.mul(m);
        }
        Ok(acc)
    }

    /// `g ρ g⁻¹`.
    pub fn conjugate(&self, g: &Matrix<Scalar>) -> Result<Representation> {
        let gi = linalg::inverse(g)?;
        Representation::new(self.images.iter().map(|m| g.mul(m).mul(&gi)).collect())
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        if self.generator_count() != other.generator_count() {
            return Err(Error::Dimension("direct sum of different arities".into()));
        }
        Representation::new(
            self.images
                .iter()
                .zip(&other.images)
                .map(|(a, b)| Matrix::block_diagonal(&[a.clone(), b.clone()]))
                .collect(),
        )
    }

    /// Reinterprets a rational representation over F_p.
    pub fn to_field(&self, field: Field) -> Result<Representation> {
        Representation::new(
            self.images
                .iter()
                .map(|m| m.try_map(|e| field.coerce(e)))
                .collect::<Result<_>>()?,
        )
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim {} over {}:", self.dim, self.field)?;
        for m in &self.images {
            write!(f, " {m}")?;
        }
        Ok(())
    }
}

/// Least common multiple of `1..=d`, the ambient size for bound `d`.
pub fn pi_multiple(d: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    (1..=d.max(1)).fold(1, |acc, k| acc / gcd(acc, k) * k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::int_matrix;

    fn rep(mats: &[&[&[i64]]]) -> Representation {
        Representation::new(
            mats.iter()
                .map(|m| int_matrix(Field::Rational, m))
                .collect(),
        )
        .unwrap()
    }

    fn pauli() -> Representation {
        rep(&[&[&[1, 0], &[0, -1]], &[&[0, 1], &[1, 0]]])
    }

    #[test]
    fn parse_anticommutator() {
        let p = Presentation::parse("gens x y; rel x*y + y*x;").unwrap();
        assert_eq!(p.generator_count(), 2);
        let words: Vec<Vec<usize>> = p.relations()[0]
            .terms()
            .keys()
            .map(|w| w.letters().to_vec())
            .collect();
        assert_eq!(words, vec![vec![1, 2], vec![2, 1]]);
        assert!(p.relations()[0].terms().values().all(Scalar::is_one));
    }

    #[test]
    fn parse_power_and_constant() {
        let p = Presentation::parse("gens x; rel x^3 - 1;").unwrap();
        let r = &p.relations()[0];
        assert_eq!(r.terms().len(), 2);
        assert_eq!(
            r.coefficient(&Word::new(vec![1, 1, 1])),
            Field::Rational.one()
        );
        assert_eq!(r.coefficient(&Word::empty()), Field::Rational.from_i64(-1));
    }

    #[test]
    fn parse_expands_products() {
        let p = Presentation::parse("gens x y; rel (x+y)*x;").unwrap();
        assert_eq!(p.relations()[0].render(p.names()), "x^2 + y*x");
    }

    #[test]
    fn parse_errors() {
        match Presentation::parse("gens x y;\nrel x*z;") {
            Err(Error::UnknownGenerator { name, line, column }) => {
                assert_eq!((name.as_str(), line, column), ("z", 2, 7));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            Presentation::parse("gens x; rel 1/0*x;"),
            Err(Error::Parse { .. })
        ));
        match Presentation::parse("gens x;\n  rel x +;") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 10)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(Presentation::parse("gens x x;").is_err());
        assert!(Presentation::parse("rel x;").is_err());
    }

    #[test]
    fn canonical_round_trip() {
        let text = "gens x y; bound 2; rel 3/2*x*y - (y - 1)^2 + 2 x; rel x*y*x;";
        let p = Presentation::parse(text).unwrap();
        let printed = p.to_string();
        assert_eq!(Presentation::parse(&printed).unwrap(), p);
        assert_eq!(p.bound(), Some(2));
    }

    #[test]
    fn quantum_plane_validation() {
        let p = Presentation::parse("gens x y; rel x*y + y*x;").unwrap();
        assert!(p.validate(&pauli()).unwrap().is_ok());
        let bad = rep(&[&[&[1, 0], &[0, -1]], &[&[1, 0], &[0, 1]]]);
        let v = p.validate(&bad).unwrap();
        assert_eq!(v.violations.len(), 1);
        assert_eq!(
            v.violations[0].value,
            int_matrix(Field::Rational, &[&[2, 0], &[0, -2]])
        );
        assert!(p.validate(&rep(&[&[&[0]], &[&[0]]])).unwrap().is_ok());
    }

    #[test]
    fn validation_errors() {
        let p = Presentation::parse("gens x y z; rel x;").unwrap();
        assert!(matches!(p.validate(&pauli()), Err(Error::Dimension(_))));
        let p = Presentation::parse("gens x y; bound 1;").unwrap();
        assert!(p.validate(&pauli()).is_err());
    }

    #[test]
    fn quotients() {
        let qplane = Presentation::parse("gens x y; rel x*y + y*x;").unwrap();
        let y = NCPoly::generator(Field::Rational, 2);
        let q = qplane.quotient(&[y]).unwrap();
        assert!(!q.validate(&pauli()).unwrap().is_ok());
        assert!(q.validate(&rep(&[&[&[3]], &[&[0]]])).unwrap().is_ok());

        let again = qplane.quotient(qplane.relations()).unwrap();
        assert!(again.validate(&pauli()).unwrap().is_ok());

        let comm = Presentation::parse("gens x y; rel x*y - y*x;").unwrap();
        let free = Presentation::free(2);
        let q = free.quotient(comm.relations()).unwrap();
        assert!(q
            .validate(&rep(&[&[&[1, 0], &[0, 2]], &[&[3, 0], &[0, 4]]]))
            .unwrap()
            .is_ok());
        assert!(!q.validate(&pauli()).unwrap().is_ok());
    }

    #[test]
    fn lcm_multiples() {
        assert_eq!(pi_multiple(1), 1);
        assert_eq!(pi_multiple(2), 2);
        assert_eq!(pi_multiple(3), 6);
        assert_eq!(pi_multiple(4), 12);
    }
}
