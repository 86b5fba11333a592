use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::{Field, Ring, Scalar};
use crate::error::{Error, Result};
use crate::matrices::Matrix;

/// A monomial in the free algebra: a sequence of 1-based generator indices.
/// The empty word is the identity. Words compare graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        assert!(
            letters.iter().all(|&l| l >= 1),
            "generator indices start at 1"
        );
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(gen: usize) -> Self {
        Word::new(vec![gen])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest generator index used, 0 for the empty word.
    pub fn max_letter(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Renders with the given generator names, collapsing runs into powers.
    pub fn render(&self, names: &[String]) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let g = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == g {
                run += 1;
            }
            let name = names.get(g - 1).cloned().unwrap_or_else(|| format!("x{g}"));
            parts.push(if run == 1 {
                name
            } else {
                format!("{name}^{run}")
            });
            i += run;
        }
        parts.join("*")
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Dot-separated generator indices, `e` for the empty word.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join("."))
    }
}

/// A noncommutative polynomial: finitely supported map from words to
/// nonzero scalars of one field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NCPoly {
    field: Field,
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero(field: Field) -> Self {
        NCPoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: Field) -> Self {
        Self::monomial(field.one(), Word::empty())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(c, Word::empty())
    }

    pub fn generator(field: Field, gen: usize) -> Self {
        Self::monomial(field.one(), Word::letter(gen))
    }

    pub fn monomial(c: Scalar, w: Word) -> Self {
        let mut p = NCPoly::zero(c.field());
        if !c.is_zero() {
            p.terms.insert(w, c);
        }
        p
    }

    /// Builds a polynomial from `(word, coefficient)` pairs, summing repeats.
    pub fn from_terms(
        field: Field,
        terms: impl IntoIterator<Item = (Word, Scalar)>,
    ) -> Result<Self> {
        let mut p = NCPoly::zero(field);
        for (w, c) in terms {
            let c = field.coerce(&c)?;
            p.add_term(w, &c);
        }
        Ok(p)
    }

    fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(e) => {
                *e = e.add(c);
                if e.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> &BTreeMap<Word, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.terms
            .get(w)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// Largest generator index appearing in any term.
    pub fn arity(&self) -> usize {
        self.terms.keys().map(Word::max_letter).max().unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    fn check(&self, rhs: &NCPoly) -> Result<()> {
        if self.field == rhs.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.field,
                right: rhs.field,
            })
        }
    }

    pub fn try_add(&self, rhs: &NCPoly) -> Result<NCPoly> {
        self.check(rhs)?;
        Ok(Ring::add(self, rhs))
    }

    pub fn try_sub(&self, rhs: &NCPoly) -> Result<NCPoly> {
        self.check(rhs)?;
        Ok(Ring::sub(self, rhs))
    }

    pub fn try_mul(&self, rhs: &NCPoly) -> Result<NCPoly> {
        self.check(rhs)?;
        Ok(Ring::mul(self, rhs))
    }

    pub fn pow(&self, e: u32) -> NCPoly {
        (0..e).fold(NCPoly::one(self.field), |acc, _| Ring::mul(&acc, self))
    }

    /// Reinterprets the coefficients in another field (rationals reduce mod p).
    pub fn to_field(&self, field: Field) -> Result<NCPoly> {
        if field == self.field {
            return Ok(self.clone());
        }
        NCPoly::from_terms(
            field,
            self.terms.iter().map(|(w, c)| (w.clone(), c.clone())),
        )
    }

    /// Substitutes polynomials for the generators (algebra endomorphism).
    pub fn substitute(&self, images: &[NCPoly]) -> Result<NCPoly> {
        let mut out = NCPoly::zero(self.field);
        for (w, c) in &self.terms {
            let mut term = NCPoly::constant(c.clone());
            for &g in w.letters() {
                let img = images.get(g - 1).ok_or(Error::Arity {
                    index: g,
                    arity: images.len(),
                })?;
                term = term.try_mul(img)?;
            }
            out = out.try_add(&term)?;
        }
        Ok(out)
    }

    /// Canonical text form: terms in graded-lex order, coefficient 1
    /// omitted, the empty word rendered as its bare coefficient.
    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let coeff = match c {
                Scalar::Modular { .. } => format!("({c})"),
                Scalar::Rational(_) => c.to_string(),
            };
            let (negative, coeff) = match coeff.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, coeff),
            };
            let body = if w.is_empty() {
                coeff
            } else if coeff == "1" {
                w.render(names)
            } else {
                format!("{coeff}*{}", w.render(names))
            };
            match (i, negative) {
                (0, false) => out.push_str(&body),
                (0, true) => {
                    out.push('-');
                    out.push_str(&body);
                }
                (_, false) => {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
                (_, true) => {
                    out.push_str(" - ");
                    out.push_str(&body);
                }
            }
        }
        out
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

/// Panics on mixed fields; see the `try_*` methods.
impl Ring for NCPoly {
    fn zero_like(&self) -> Self {
        NCPoly::zero(self.field)
    }

    fn one_like(&self) -> Self {
        NCPoly::one(self.field)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.field, rhs.field, "polynomials over different fields");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    fn sub(&self, rhs: &Self) -> Self {
        Ring::add(self, &Ring::neg(rhs))
    }

    fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.field, rhs.field, "polynomials over different fields");
        let mut out = NCPoly::zero(self.field);
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u.concat(v), &a.mul(b));
            }
        }
        out
    }

    fn neg(&self) -> Self {
        NCPoly {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.neg()))
                .collect(),
        }
    }

    fn scale(&self, c: &Scalar) -> Self {
        let mut out = NCPoly::zero(self.field);
        for (w, a) in &self.terms {
            out.add_term(w.clone(), &a.mul(c));
        }
        out
    }

    fn field(&self) -> Field {
        self.field
    }
}

/// Evaluates `p` with generator ℓ ↦ `mats[ℓ-1]` and the empty word ↦ `unit`.
///
/// Rational coefficients are mapped into the matrices' field, so relations
/// written over ℚ can be checked against representations over F_p.
pub fn nc_eval<R: Ring>(p: &NCPoly, mats: &[Matrix<R>], unit: &Matrix<R>) -> Result<Matrix<R>> {
    let n = unit.rows();
    if !unit.is_square() || mats.iter().any(|m| m.rows() != n || m.cols() != n) {
        return Err(Error::Dimension(
            "evaluation matrices must share one square size".into(),
        ));
    }
    if p.arity() > mats.len() {
        return Err(Error::Arity {
            index: p.arity(),
            arity: mats.len(),
        });
    }
    let field = unit.field();
    let p = match p.field() {
        f if f == field => p.clone(),
        Field::Rational => p.to_field(field)?,
        f => {
            return Err(Error::FieldMismatch {
                left: f,
                right: field,
            })
        }
    };
    let mut acc = Matrix::zeros(n, n, &unit.entries()[0]);
    for (w, c) in p.terms() {
        let prod = w
            .letters()
            .iter()
            .fold(None::<Matrix<R>>, |acc, &g| {
                Some(match acc {
                    None => mats[g - 1].clone(),
                    Some(m) => m.mul(&mats[g - 1]),
                })
            })
            .unwrap_or_else(|| unit.clone());
        acc = acc.add(&prod.scale(c));
    }
    Ok(acc)
}
