use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::{Field, Ring, Scalar};
use crate::error::{Error, Result};

/// The generic-matrix coordinate `x^(gen, size)_{row, col}`. Rows and
/// columns are 1-based; the size tag keeps rings of different sizes apart.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CPolyVar {
    pub gen: usize,
    pub row: usize,
    pub col: usize,
    pub size: usize,
}

impl CPolyVar {
    pub fn new(gen: usize, row: usize, col: usize, size: usize) -> Self {
        assert!(
            gen >= 1 && (1..=size).contains(&row) && (1..=size).contains(&col),
            "coordinate x^({gen},{size})_{{{row},{col}}} out of range"
        );
        CPolyVar {
            gen,
            row,
            col,
            size,
        }
    }
}

impl fmt::Display for CPolyVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}[{},{};{}]", self.gen, self.row, self.col, self.size)
    }
}

/// A commutative monomial: variables with positive exponents, sorted by
/// variable. Ordered by total degree, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(CPolyVar, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: CPolyVar) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn factors(&self) -> &[(CPolyVar, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &rhs.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(v, e)| {
                if *e == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// A sparse commutative polynomial in generic-matrix coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CPoly {
    field: Field,
    terms: BTreeMap<Monomial, Scalar>,
}

impl CPoly {
    pub fn zero(field: Field) -> Self {
        CPoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: Field) -> Self {
        Self::constant(field.one())
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = CPoly::zero(c.field());
        p.add_term(Monomial::one(), &c);
        p
    }

    pub fn var(field: Field, v: CPolyVar) -> Self {
        let mut p = CPoly::zero(field);
        p.add_term(Monomial::var(v), &field.one());
        p
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                *e = e.add(c);
                if e.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn variables(&self) -> BTreeSet<CPolyVar> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|(v, _)| *v))
            .collect()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    fn check(&self, rhs: &CPoly) -> Result<()> {
        if self.field == rhs.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.field,
                right: rhs.field,
            })
        }
    }

    pub fn try_add(&self, rhs: &CPoly) -> Result<CPoly> {
        self.check(rhs)?;
        Ok(Ring::add(self, rhs))
    }

    pub fn try_sub(&self, rhs: &CPoly) -> Result<CPoly> {
        self.check(rhs)?;
        Ok(Ring::sub(self, rhs))
    }

    pub fn try_mul(&self, rhs: &CPoly) -> Result<CPoly> {
        self.check(rhs)?;
        Ok(Ring::mul(self, rhs))
    }

    pub fn pow(&self, e: u32) -> CPoly {
        (0..e).fold(CPoly::one(self.field), |acc, _| Ring::mul(&acc, self))
    }

    /// Evaluates at a point given by `value` for each variable.
    pub fn eval(&self, value: &dyn Fn(&CPolyVar) -> Result<Scalar>) -> Result<Scalar> {
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.factors() {
                t = t.checked_mul(&value(v)?.pow(*e as u64))?;
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Ring homomorphism sending each variable to `image(v)`.
    pub fn substitute(&self, image: &dyn Fn(&CPolyVar) -> Result<CPoly>) -> Result<CPoly> {
        let mut cache: BTreeMap<CPolyVar, CPoly> = BTreeMap::new();
        let mut acc = CPoly::zero(self.field);
        for (m, c) in &self.terms {
            let mut t = CPoly::constant(c.clone());
            for (v, e) in m.factors() {
                if !cache.contains_key(v) {
                    cache.insert(*v, image(v)?);
                }
                t = t.try_mul(&cache[v].pow(*e))?;
                if t.is_zero() {
                    break;
                }
            }
            acc = acc.try_add(&t)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let coeff = match c {
                Scalar::Modular { .. } => format!("({c})"),
                Scalar::Rational(_) => c.to_string(),
            };
            let (neg, coeff) = match coeff.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, coeff),
            };
            let body = if m.factors().is_empty() {
                coeff
            } else if coeff == "1" {
                m.to_string()
            } else {
                format!("{coeff}*{m}")
            };
            let sep = match (i, neg) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            write!(f, "{sep}{body}")?;
        }
        Ok(())
    }
}

/// Panics on mixed fields; see the `try_*` methods.
impl Ring for CPoly {
    fn zero_like(&self) -> Self {
        CPoly::zero(self.field)
    }

    fn one_like(&self) -> Self {
        CPoly::one(self.field)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.field, rhs.field, "polynomials over different fields");
        let (mut out, other) = if self.terms.len() >= rhs.terms.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    fn sub(&self, rhs: &Self) -> Self {
        Ring::add(self, &Ring::neg(rhs))
    }

    fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.field, rhs.field, "polynomials over different fields");
        let mut out = CPoly::zero(self.field);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.mul(b), &ca.mul(cb));
            }
        }
        out
    }

    fn neg(&self) -> Self {
        CPoly {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    fn scale(&self, c: &Scalar) -> Self {
        let mut out = CPoly::zero(self.field);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), &a.mul(c));
        }
        out
    }

    fn field(&self) -> Field {
        self.field
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(gen: usize) -> CPoly {
        CPoly::var(Field::Rational, CPolyVar::new(gen, 1, 1, 1))
    }

    #[test]
    fn difference_of_squares() {
        let (x, y) = (v(1), v(2));
        let lhs = x
            .try_add(&y)
            .unwrap()
            .try_mul(&x.try_sub(&y).unwrap())
            .unwrap();
        let rhs = x.pow(2).try_sub(&y.pow(2)).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.to_string(), "x1[1,1;1]^2 - x2[1,1;1]^2");
    }

    #[test]
    fn constants_cancel() {
        let f = Field::Rational;
        let lam = v(1);
        let p = lam.pow(2).try_sub(&CPoly::one(f)).unwrap();
        let sum = p.try_add(&CPoly::one(f)).unwrap();
        assert_eq!(sum, lam.pow(2));
    }

    #[test]
    fn eval_and_substitute() {
        let f = Field::Rational;
        let p = v(1)
            .try_mul(&v(2))
            .unwrap()
            .try_add(&CPoly::constant(f.from_i64(3)))
            .unwrap();
        let val = p
            .eval(&|var: &CPolyVar| Ok(f.from_i64(var.gen as i64 + 1)))
            .unwrap();
        assert_eq!(val, f.from_i64(9));
        let sub = p.substitute(&|_| Ok(v(3))).unwrap();
        assert_eq!(
            sub,
            v(3).pow(2)
                .try_add(&CPoly::constant(f.from_i64(3)))
                .unwrap()
        );
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = CPoly::one(Field::prime(5).unwrap());
        assert!(a.try_mul(&CPoly::one(Field::Rational)).is_err());
    }
}
