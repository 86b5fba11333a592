//! Trace coordinates of representations: characteristic-polynomial
//! coefficients of every word up to a length bound.

use std::collections::HashMap;
use std::fmt;

use crate::algebra::{Field, Ring, Scalar, Word};
use crate::error::{Error, Result};
use crate::genmat::BlockSpec;
use crate::matrices::Matrix;
use crate::oracle::{burnside_irreducible, upoly::UPoly};
use crate::presentations::Representation;

/// All nonempty words in `1..=s` of length at most `bound`, graded-lex.
pub fn enumerate_words(s: usize, bound: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut layer = vec![Word::empty()];
    for _ in 0..bound {
        layer = layer
            .iter()
            .flat_map(|w| (1..=s).map(move |g| w.concat(&Word::letter(g))))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Cap applied to the default word bound.
pub const DEFAULT_BOUND_CAP: usize = 8;

/// `min(2ⁿ − 1, cap)`.
pub fn default_bound(n: usize, cap: usize) -> usize {
    let classical = if n >= usize::BITS as usize - 1 {
        usize::MAX
    } else {
        (1usize << n) - 1
    };
    classical.min(cap).max(1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    s: usize,
    n: usize,
    bound: usize,
    field: Field,
    /// One row per word in enumeration order: `c₁, …, c_n` of its charpoly.
    rows: Vec<(Word, Vec<Scalar>)>,
}

impl Fingerprint {
    pub fn generator_count(&self) -> usize {
        self.s
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> &[(Word, Vec<Scalar>)] {
        &self.rows
    }

    /// Charpoly coefficients recorded for `w`.
    pub fn coeffs(&self, w: &Word) -> Option<&[Scalar]> {
        self.rows
            .iter()
            .find(|(v, _)| v == w)
            .map(|(_, c)| c.as_slice())
    }

    /// `(word, i, value)` with `i` 1-based.
    pub fn entries(&self) -> impl Iterator<Item = (&Word, usize, &Scalar)> {
        self.rows
            .iter()
            .flat_map(|(w, cs)| cs.iter().enumerate().map(move |(i, c)| (w, i + 1, c)))
    }

    fn check_shape(&self, other: &Fingerprint) -> Result<()> {
        if (self.s, self.n, self.bound, self.field) != (other.s, other.n, other.bound, other.field)
        {
            return Err(Error::ShapeMismatch(format!(
                "({} {} {} {}) vs ({} {} {} {})",
                self.s, self.n, self.bound, self.field, other.s, other.n, other.bound, other.field
            )));
        }
        Ok(())
    }

    /// The first entry where the two fingerprints differ.
    pub fn first_difference(&self, other: &Fingerprint) -> Result<Option<(Word, usize)>> {
        self.check_shape(other)?;
        Ok(self
            .entries()
            .zip(other.entries())
            .find(|((_, _, a), (_, _, b))| a != b)
            .map(|((w, i, _), _)| (w.clone(), i)))
    }
}

/// Canonical text: header `s n L field`, then `word i value` per entry.
impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {} {}", self.s, self.n, self.bound, self.field)?;
        for (w, i, c) in self.entries() {
            writeln!(f, "{w} {i} {}", c.value_string())?;
        }
        Ok(())
    }
}

/// Charpoly coefficients of `ρ(w)` for every word of length ≤ `bound`.
pub fn theta(rep: &Representation, bound: usize) -> Result<Fingerprint> {
    if bound == 0 {
        return Err(Error::Dimension("word bound must be at least 1".into()));
    }
    let s = rep.generator_count();
    let mut cache: HashMap<Word, Matrix<Scalar>> = HashMap::new();
    let mut rows = Vec::new();
    for w in enumerate_words(s, bound) {
        let letters = w.letters();
        let last = &rep.images()[letters[letters.len() - 1] - 1];
        let m = if letters.len() == 1 {
            last.clone()
        } else {
            cache[&Word::new(letters[..letters.len() - 1].to_vec())].mul(last)
        };
        rows.push((w.clone(), m.charpoly()?.into_coeffs()));
        if w.len() < bound {
            cache.insert(w, m);
        }
    }
    Ok(Fingerprint {
        s,
        n: rep.dim(),
        bound,
        field: rep.field(),
        rows,
    })
}

/// `N/m` diagonal copies of an `m`-dimensional representation.
pub fn blowup(rep: &Representation, n: usize) -> Result<Representation> {
    let spec = BlockSpec::new(rep.dim(), n)?;
    Representation::new(
        rep.images()
            .iter()
            .map(|m| spec.block_diagonal(m))
            .collect::<Result<_>>()?,
    )
}

/// The fingerprint of the blow-up of an absolutely irreducible representation.
pub fn psi(rep: &Representation, n: usize, bound: usize) -> Result<Fingerprint> {
    BlockSpec::new(rep.dim(), n)?;
    if !burnside_irreducible(rep) {
        return Err(Error::Reducible);
    }
    theta(&blowup(rep, n)?, bound)
}

pub fn fingerprints_equal(a: &Fingerprint, b: &Fingerprint) -> Result<bool> {
    a.check_shape(b)?;
    Ok(a.rows == b.rows)
}

/// Whether every word's characteristic polynomial is the `(N/m)`-th power
/// of a monic polynomial of degree `m`.
pub fn jm_membership(fp: &Fingerprint, m: usize) -> Result<bool> {
    let spec = BlockSpec::new(m, fp.dim())?;
    let k = spec.copies();
    for (_, cs) in fp.rows() {
        let f = charpoly_upoly(fp.field(), cs);
        match kth_root(&f, k) {
            Some(g) if pow(&g, k) == f => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

fn charpoly_upoly(field: Field, cs: &[Scalar]) -> UPoly {
    let mut coeffs: Vec<Scalar> = cs.iter().rev().cloned().collect();
    coeffs.push(field.one());
    UPoly::new(field, coeffs)
}

fn pow(g: &UPoly, k: usize) -> UPoly {
    (0..k).fold(UPoly::one(g.field()), |acc, _| acc.mul(g))
}

/// Candidate monic `g` with `g^k = f`; the caller verifies the power.
fn kth_root(f: &UPoly, k: usize) -> Option<UPoly> {
    let field = f.field();
    let big_n = f.degree();
    if !big_n.is_multiple_of(k) {
        return None;
    }
    let p = field.characteristic() as usize;
    if p != 0 && k.is_multiple_of(p) {
        // g^(p^a) = g(λ^(p^a)) over F_p: take the coprime root, then
        // read off a polynomial in λ^(p^a).
        let mut q = 1;
        let mut rest = k;
        while rest.is_multiple_of(p) {
            rest /= p;
            q *= p;
        }
        let h = kth_root(f, rest)?;
        let hc = h.coeffs();
        if hc
            .iter()
            .enumerate()
            .any(|(i, c)| i % q != 0 && !c.is_zero())
        {
            return None;
        }
        return Some(UPoly::new(field, hc.iter().step_by(q).cloned().collect()));
    }
    let m = big_n / k;
    let inv_k = field.from_i64(k as i64).inv().ok()?;
    // Coefficients high to low: g = λ^m + g₁λ^(m−1) + … ; the λ^(N−r)
    // coefficient of g^k is k·g_r plus terms in g₁ … g_(r−1).
    let mut g = vec![field.one()];
    let fc = f.coeffs();
    for r in 1..=m {
        g.push(field.zero());
        let trial = UPoly::new(field, g.iter().rev().cloned().collect());
        // Shift so the partial polynomial has degree m.
        let shifted = trial.mul(&UPoly::new(
            field,
            (0..=m - r)
                .map(|i| {
                    if i == m - r {
                        field.one()
                    } else {
                        field.zero()
                    }
                })
                .collect(),
        ));
        let t = pow(&shifted, k).coeffs()[big_n - r].clone();
        g[r] = fc[big_n - r].sub(&t).mul(&inv_k);
    }
    Some(UPoly::new(field, g.into_iter().rev().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::int_matrix;

    fn rep(field: Field, mats: &[&[&[i64]]]) -> Representation {
        Representation::new(mats.iter().map(|m| int_matrix(field, m)).collect()).unwrap()
    }

    fn pauli() -> Representation {
        rep(
            Field::Rational,
            &[&[&[1, 0], &[0, -1]], &[&[0, 1], &[1, 0]]],
        )
    }

    fn ints(fp: &Fingerprint, w: &[usize]) -> Vec<i64> {
        fp.coeffs(&Word::new(w.to_vec()))
            .unwrap()
            .iter()
            .map(|c| c.value_string().parse().unwrap())
            .collect()
    }

    #[test]
    fn word_enumeration() {
        let w: Vec<String> = enumerate_words(2, 2).iter().map(Word::to_string).collect();
        assert_eq!(w, ["1", "2", "1.1", "1.2", "2.1", "2.2"]);
        assert_eq!(enumerate_words(1, 3).len(), 3);
        assert_eq!(enumerate_words(3, 3).len(), 3 + 9 + 27);
    }

    #[test]
    fn bound_defaults() {
        assert_eq!(default_bound(1, 8), 1);
        assert_eq!(default_bound(3, 8), 7);
        assert_eq!(default_bound(4, 8), 8);
    }

    #[test]
    fn theta_examples() {
        let one = rep(Field::Rational, &[&[&[3]], &[&[0]]]);
        let fp = theta(&one, 1).unwrap();
        assert_eq!(ints(&fp, &[1]), [-3]);
        assert_eq!(ints(&fp, &[2]), [0]);

        let nil = rep(Field::Rational, &[&[&[0, 1], &[0, 0]], &[&[0, 0], &[0, 0]]]);
        assert!(theta(&nil, 2)
            .unwrap()
            .entries()
            .all(|(_, _, c)| c.is_zero()));

        let fp = theta(&pauli(), 2).unwrap();
        assert_eq!(ints(&fp, &[1]), [0, -1]);
        assert_eq!(ints(&fp, &[2]), [0, -1]);
        assert_eq!(ints(&fp, &[1, 2]), [0, 1]);
        assert_eq!(ints(&fp, &[2, 1]), [0, 1]);
        assert_eq!(ints(&fp, &[1, 1]), [-2, 1]);
        assert_eq!(ints(&fp, &[2, 2]), [-2, 1]);
    }

    #[test]
    fn canonical_text() {
        let fp = theta(&rep(Field::prime(5).unwrap(), &[&[&[3]], &[&[0]]]), 1).unwrap();
        assert_eq!(fp.to_string(), "2 1 1 Fp:5\n1 1 2\n2 1 0\n");
    }

    #[test]
    fn psi_examples() {
        let a = rep(Field::Rational, &[&[&[3]], &[&[0]]]);
        let fp = psi(&a, 2, 2).unwrap();
        assert_eq!(ints(&fp, &[1]), [-6, 9]);
        assert_eq!(ints(&fp, &[2]), [0, 0]);
        assert_eq!(ints(&fp, &[1, 1]), [-18, 81]);
        assert_eq!(ints(&fp, &[1, 2]), [0, 0]);

        assert_eq!(psi(&pauli(), 2, 2).unwrap(), theta(&pauli(), 2).unwrap());

        let b = rep(Field::Rational, &[&[&[5]], &[&[0]]]);
        assert_eq!(ints(&psi(&b, 2, 2).unwrap(), &[1]), [-10, 25]);

        let nil = rep(Field::Rational, &[&[&[0, 1], &[0, 0]], &[&[0, 0], &[0, 0]]]);
        assert!(matches!(psi(&nil, 2, 2), Err(Error::Reducible)));
        assert!(matches!(psi(&pauli(), 3, 2), Err(Error::BlockSize { .. })));
    }

    #[test]
    fn equality_examples() {
        let nil = rep(Field::Rational, &[&[&[0, 1], &[0, 0]], &[&[0, 0], &[0, 0]]]);
        let zero = rep(Field::Rational, &[&[&[0, 0], &[0, 0]], &[&[0, 0], &[0, 0]]]);
        let (fa, fb, fc) = (
            theta(&nil, 3).unwrap(),
            theta(&zero, 3).unwrap(),
            theta(&pauli(), 3).unwrap(),
        );
        assert!(fingerprints_equal(&fa, &fb).unwrap());
        assert!(!fingerprints_equal(&fc, &fb).unwrap());
        assert_eq!(
            fc.first_difference(&fb).unwrap(),
            Some((Word::new(vec![1]), 2))
        );
        assert!(fingerprints_equal(&fc, &fc).unwrap());
        let short = theta(&zero, 2).unwrap();
        assert!(matches!(
            fingerprints_equal(&fa, &short),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn jm_examples() {
        let a = rep(Field::Rational, &[&[&[3]], &[&[0]]]);
        assert!(jm_membership(&psi(&a, 2, 2).unwrap(), 1).unwrap());
        let fp = theta(&pauli(), 2).unwrap();
        assert!(!jm_membership(&fp, 1).unwrap());
        assert!(jm_membership(&fp, 2).unwrap());
        assert!(matches!(
            jm_membership(&fp, 3),
            Err(Error::BlockSize { .. })
        ));
    }

    #[test]
    fn jm_in_dividing_characteristic() {
        // Over F_2 the square of λ + 1 is λ² + 1; λ² + λ + 1 is not a square.
        let f2 = Field::prime(2).unwrap();
        let one = rep(f2, &[&[&[1]], &[&[0]]]);
        assert!(jm_membership(&theta(&blowup(&one, 2).unwrap(), 2).unwrap(), 1).unwrap());
        let c = rep(f2, &[&[&[0, 1], &[1, 1]], &[&[0, 0], &[0, 0]]]);
        assert!(!jm_membership(&theta(&c, 1).unwrap(), 1).unwrap());
    }

    #[test]
    fn blowup_power_law() {
        let r = pauli();
        let big = blowup(&r, 4).unwrap();
        for w in enumerate_words(2, 3) {
            let f = charpoly_upoly(
                Field::Rational,
                &r.word_image(&w).unwrap().charpoly().unwrap().into_coeffs(),
            );
            let g = charpoly_upoly(
                Field::Rational,
                &big.word_image(&w)
                    .unwrap()
                    .charpoly()
                    .unwrap()
                    .into_coeffs(),
            );
            assert_eq!(pow(&f, 2), g);
        }
    }
}
