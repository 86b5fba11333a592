//! Central polynomials for `m × m` matrices, the irreducibility criterion
//! they give, and the stratum classification of fingerprint points.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::Range;

use crate::algebra::{Field, NCPoly, Ring, Scalar, Word};
use crate::error::{Error, Result};
use crate::fingerprint::{blowup, jm_membership, theta};
use crate::genmat::BlockSpec;
use crate::matrices::Matrix;
use crate::oracle::{burnside_irreducible, composition_factors};
use crate::presentations::Representation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    /// `p₁ = z` for 1 × 1 matrices.
    Identity,
    /// `[x, y]²` for 2 × 2 matrices.
    Hall,
    Formanek,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Construction::Identity => "identity",
            Construction::Hall => "hall",
            Construction::Formanek => "formanek",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CentralPolynomial {
    m: usize,
    construction: Construction,
    body: NCPoly,
    names: Vec<String>,
    /// Arguments the polynomial is symmetric in; the witness search only
    /// visits sorted assignments to them.
    symmetric: Range<usize>,
    /// Arguments at which substituting the identity forces the value 0.
    killed_by_identity: Vec<usize>,
}

impl CentralPolynomial {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    pub fn body(&self) -> &NCPoly {
        &self.body
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn render(&self) -> String {
        self.body.render(&self.names)
    }

    /// Evaluates at `arity` matrices of one size.
    pub fn evaluate(&self, args: &[Matrix<Scalar>]) -> Result<Matrix<Scalar>> {
        if args.len() != self.arity() {
            return Err(Error::Arity {
                index: self.arity(),
                arity: args.len(),
            });
        }
        let field = args[0].field();
        let unit = Matrix::identity(args[0].rows(), &field.one());
        crate::algebra::nc_eval(&self.body, args, &unit)
    }
}

/// The default central polynomial for `m × m` matrices: `z` for m = 1,
/// Hall's `[x, y]²` for m = 2, Formanek's construction beyond.
pub fn central_poly(m: usize) -> CentralPolynomial {
    match m {
        0 => panic!("central polynomials need m ≥ 1"),
        1 => identity_poly(),
        2 => hall(),
        _ => formanek(m),
    }
}

fn identity_poly() -> CentralPolynomial {
    CentralPolynomial {
        m: 1,
        construction: Construction::Identity,
        body: NCPoly::generator(Field::Rational, 1),
        names: vec!["z".into()],
        symmetric: 0..0,
        killed_by_identity: Vec::new(),
    }
}

pub fn hall() -> CentralPolynomial {
    let q = Field::Rational;
    let x = NCPoly::generator(q, 1);
    let y = NCPoly::generator(q, 2);
    let c = x
        .try_mul(&y)
        .and_then(|a| a.try_sub(&y.try_mul(&x)?))
        .expect("one field");
    CentralPolynomial {
        m: 2,
        construction: Construction::Hall,
        body: c.pow(2),
        names: vec!["x".into(), "y".into()],
        symmetric: 0..2,
        killed_by_identity: vec![0, 1],
    }
}

/// Exponent vector to coefficient.
type Commutative = BTreeMap<Vec<u32>, i64>;

fn linear_difference(vars: usize, a: usize, b: usize) -> Commutative {
    let unit = |i: usize| {
        let mut e = vec![0; vars];
        e[i] = 1;
        e
    };
    BTreeMap::from([(unit(a), 1), (unit(b), -1)])
}

fn multiply(f: &Commutative, g: &Commutative) -> Commutative {
    let mut out = Commutative::new();
    for (ea, ca) in f {
        for (eb, cb) in g {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Formanek's polynomial in `x, y₁, …, y_m`: with
/// `G = Π_{i=2..m} (t₁ − tᵢ)(t_{m+1} − tᵢ) · Π_{2≤i<j≤m} (tᵢ − tⱼ)²`, each
/// monomial `Π tᵢ^{aᵢ}` becomes `x^{a₁} y_{σ1} x^{a₂} ⋯ y_{σm} x^{a_{m+1}}`,
/// summed over all permutations σ.
pub fn formanek(m: usize) -> CentralPolynomial {
    assert!(m >= 1, "central polynomials need m ≥ 1");
    let vars = m + 1;
    let mut g: Commutative = BTreeMap::from([(vec![0; vars], 1)]);
    for i in 1..m {
        g = multiply(&g, &linear_difference(vars, 0, i));
        g = multiply(&g, &linear_difference(vars, m, i));
    }
    for i in 1..m {
        for j in i + 1..m {
            let d = linear_difference(vars, i, j);
            g = multiply(&g, &multiply(&d, &d));
        }
    }
    let q = Field::Rational;
    let mut terms: Vec<(Word, Scalar)> = Vec::new();
    for sigma in permutations(m) {
        for (exps, c) in &g {
            let mut letters = Vec::new();
            for (slot, &a) in exps.iter().enumerate() {
                letters.extend(std::iter::repeat_n(1, a as usize));
                if slot < m {
                    letters.push(sigma[slot] + 2);
                }
            }
            terms.push((Word::new(letters), q.from_i64(*c)));
        }
    }
    let mut names = vec!["x".to_string()];
    names.extend((1..=m).map(|i| format!("y{i}")));
    CentralPolynomial {
        m,
        construction: Construction::Formanek,
        body: NCPoly::from_terms(q, terms).expect("rational terms"),
        names,
        symmetric: 1..m + 1,
        killed_by_identity: if m >= 2 { vec![0] } else { Vec::new() },
    }
}

/// Evaluation with shared word prefixes, for repeated substitution.
struct EvalPlan {
    /// `(parent, letter)`; node 0 is the empty word.
    nodes: Vec<(usize, usize)>,
    coeffs: Vec<Option<Scalar>>,
}

impl EvalPlan {
    fn new(p: &NCPoly, field: Field) -> Result<Self> {
        let mut index: HashMap<(usize, usize), usize> = HashMap::new();
        let mut nodes = vec![(0, 0)];
        let mut coeffs = vec![None];
        for (w, c) in p.terms() {
            let mut at = 0;
            for &l in w.letters() {
                at = *index.entry((at, l)).or_insert_with(|| {
                    nodes.push((at, l));
                    coeffs.push(None);
                    nodes.len() - 1
                });
            }
            coeffs[at] = Some(field.coerce(c)?);
        }
        Ok(EvalPlan { nodes, coeffs })
    }

    fn eval(&self, args: &[&Matrix<Scalar>], unit: &Matrix<Scalar>) -> Matrix<Scalar> {
        let mut values: Vec<Matrix<Scalar>> = Vec::with_capacity(self.nodes.len());
        let mut acc = unit.scale(&unit.field().zero());
        for (i, &(parent, letter)) in self.nodes.iter().enumerate() {
            let v = if i == 0 {
                unit.clone()
            } else {
                values[parent].mul(args[letter - 1])
            };
            if let Some(c) = &self.coeffs[i] {
                acc = acc.add(&v.scale(c));
            }
            values.push(v);
        }
        acc
    }
}

/// A substitution of words for the arguments of a central polynomial with
/// nonzero scalar value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub args: Vec<Word>,
    pub value: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CentralVerdict {
    Irreducible(Witness),
    /// Every candidate substitution up to the bound evaluated to zero.
    NoWitnessFound,
}

impl CentralVerdict {
    pub fn witness(&self) -> Option<&Witness> {
        match self {
            CentralVerdict::Irreducible(w) => Some(w),
            CentralVerdict::NoWitnessFound => None,
        }
    }
}

/// Nonempty tuples of candidate indices, by total length then lexicographic.
fn tuples(
    lengths: &[usize],
    arity: usize,
    bound: usize,
    symmetric: &Range<usize>,
) -> Vec<Vec<usize>> {
    fn go(
        lengths: &[usize],
        arity: usize,
        symmetric: &Range<usize>,
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let pos = cur.len();
        if pos == arity {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let start = if pos > symmetric.start && symmetric.contains(&pos) {
            cur[pos - 1]
        } else {
            0
        };
        for c in start..lengths.len() {
            if lengths[c] <= left {
                cur.push(c);
                go(lengths, arity, symmetric, left - lengths[c], cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    for total in 0..=arity * bound {
        go(lengths, arity, symmetric, total, &mut Vec::new(), &mut out);
    }
    out
}

/// Words of length ≤ `bound` (including the empty word), graded-lex.
fn candidate_words(s: usize, bound: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    out.extend(crate::fingerprint::enumerate_words(s, bound));
    out
}

/// Searches word substitutions of length ≤ `bound` per argument into the
/// default central polynomial of size `dim ρ`.
pub fn irreducible_via_central(rep: &Representation, bound: usize) -> Result<CentralVerdict> {
    irreducible_via(rep, &central_poly(rep.dim()), bound)
}

pub fn irreducible_via(
    rep: &Representation,
    poly: &CentralPolynomial,
    bound: usize,
) -> Result<CentralVerdict> {
    if poly.m() != rep.dim() {
        return Err(Error::Dimension(format!(
            "central polynomial for {0}×{0} matrices applied to a {1}-dimensional representation",
            poly.m(),
            rep.dim()
        )));
    }
    let field = rep.field();
    let plan = EvalPlan::new(poly.body(), field)?;
    let words = candidate_words(rep.generator_count(), bound);
    let images: Vec<Matrix<Scalar>> = words
        .iter()
        .map(|w| rep.word_image(w))
        .collect::<Result<_>>()?;
    let lengths: Vec<usize> = words.iter().map(Word::len).collect();
    let unit = rep.identity();
    for t in tuples(&lengths, poly.arity(), bound, &poly.symmetric) {
        if poly.killed_by_identity.iter().any(|&i| t[i] == 0) {
            continue;
        }
        let args: Vec<&Matrix<Scalar>> = t.iter().map(|&c| &images[c]).collect();
        let value = plan.eval(&args, &unit);
        let c = value.scalar_value().ok_or_else(|| {
            Error::NotCentral(format!(
                "{} polynomial at size {}",
                poly.construction(),
                poly.m()
            ))
        })?;
        if !c.is_zero() {
            return Ok(CentralVerdict::Irreducible(Witness {
                args: t.iter().map(|&c| words[c].clone()).collect(),
                value: c,
            }));
        }
    }
    Ok(CentralVerdict::NoWitnessFound)
}

/// `λ^N` for the first nonzero central value `λ`.
pub fn km_witness(rep: &Representation, n: usize, bound: usize) -> Result<Option<Scalar>> {
    BlockSpec::new(rep.dim(), n)?;
    Ok(irreducible_via_central(rep, bound)?
        .witness()
        .map(|w| w.value.pow(n as u64)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumReport {
    pub m: usize,
    pub jm_ok: bool,
    pub km_witness: Option<Scalar>,
}

impl StratumReport {
    pub fn member(&self) -> bool {
        self.jm_ok && self.km_witness.is_some()
    }
}

/// The semisimple `m`-dimensional representation whose blow-up shares the
/// blow-up of `rep`'s fingerprint, when one exists.
fn stratum_candidate(rep: &Representation, m: usize) -> Result<Option<Representation>> {
    let n = rep.dim();
    if burnside_irreducible(rep) {
        return Ok((m == n).then(|| rep.clone()));
    }
    let cf = composition_factors(rep)?;
    let mut blocks = Vec::new();
    for (f, k) in cf.factors() {
        if !(k * m).is_multiple_of(n) {
            return Ok(None);
        }
        blocks.extend(std::iter::repeat_n(f, k * m / n));
    }
    let Some((first, rest)) = blocks.split_first() else {
        return Ok(None);
    };
    rest.iter()
        .try_fold((*first).clone(), |acc, r| acc.direct_sum(r))
        .map(Some)
}

/// One report per `m | N` with `m ≤ d`.
pub fn classify_stratum(
    rep: &Representation,
    n: usize,
    word_bound: usize,
    search_bound: usize,
    d: usize,
) -> Result<Vec<StratumReport>> {
    let fp = theta(&blowup(rep, n)?, word_bound)?;
    let mut out = Vec::new();
    for m in (1..=d.min(n)).filter(|m| n.is_multiple_of(*m)) {
        let jm_ok = jm_membership(&fp, m)?;
        let km_witness = match stratum_candidate(rep, m)? {
            Some(phi) => km_witness(&phi, n, search_bound)?,
            None => None,
        };
        out.push(StratumReport {
            m,
            jm_ok,
            km_witness,
        });
    }
    Ok(out)
}

/// The strata `m` the point belongs to.
pub fn strata(reports: &[StratumReport]) -> Vec<usize> {
    reports.iter().filter(|r| r.member()).map(|r| r.m).collect()
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

    fn nil() -> Representation {
        rep(Field::Rational, &[&[&[0, 1], &[0, 0]], &[&[0, 0], &[0, 0]]])
    }

    #[test]
    fn hall_examples() {
        let h = hall();
        let p = pauli();
        let v = h.evaluate(p.images()).unwrap();
        assert_eq!(v.scalar_value(), Some(Field::Rational.from_i64(-4)));
        let d = [
            int_matrix(Field::Rational, &[&[1, 0], &[0, 2]]),
            int_matrix(Field::Rational, &[&[3, 0], &[0, 4]]),
        ];
        assert!(h.evaluate(&d).unwrap().is_zero());
        assert_eq!(h.render(), "x*y*x*y - x*y^2*x - y*x^2*y + y*x*y*x");
    }

    #[test]
    fn identity_case() {
        let p = central_poly(1);
        let a = int_matrix(Field::Rational, &[&[7]]);
        assert_eq!(p.evaluate(std::slice::from_ref(&a)).unwrap(), a);
        let one = rep(Field::Rational, &[&[&[3]], &[&[0]]]);
        let w = irreducible_via_central(&one, 0).unwrap();
        assert_eq!(
            w,
            CentralVerdict::Irreducible(Witness {
                args: vec![Word::empty()],
                value: Field::Rational.one()
            })
        );
    }

    #[test]
    fn formanek_shape() {
        let f = formanek(2);
        assert_eq!(f.arity(), 3);
        assert_eq!(f.body().degree(), 4);
        assert_eq!(formanek(3).body().degree(), 9);
    }

    #[test]
    fn formanek_values_are_scalar() {
        let q = Field::Rational;
        let mut rng = crate::sampling::rng(3);
        for m in [2, 3] {
            let f = formanek(m);
            let mut nonzero = false;
            for _ in 0..5 {
                let args: Vec<_> = (0..f.arity())
                    .map(|_| crate::sampling::matrix(m, q, 9, &mut rng))
                    .collect();
                let v = f.evaluate(&args).unwrap();
                let c = v.scalar_value().expect("central value");
                nonzero |= !c.is_zero();
            }
            assert!(nonzero);
        }
    }

    #[test]
    fn witness_search_examples() {
        let v = irreducible_via_central(&pauli(), 1).unwrap();
        let w = v.witness().unwrap();
        assert_eq!(w.args, vec![Word::letter(1), Word::letter(2)]);
        assert_eq!(w.value, Field::Rational.from_i64(-4));
        for b in 0..=3 {
            assert_eq!(
                irreducible_via_central(&nil(), b).unwrap(),
                CentralVerdict::NoWitnessFound
            );
        }
    }

    #[test]
    fn km_examples() {
        let q = Field::Rational;
        assert_eq!(km_witness(&pauli(), 2, 1).unwrap(), Some(q.from_i64(16)));
        assert_eq!(km_witness(&nil(), 2, 2).unwrap(), None);
        let one = rep(q, &[&[&[3]], &[&[0]]]);
        assert_eq!(km_witness(&one, 2, 1).unwrap(), Some(q.one()));
        assert!(matches!(
            km_witness(&pauli(), 3, 1),
            Err(Error::BlockSize { .. })
        ));
    }

    #[test]
    fn stratum_examples() {
        let r = classify_stratum(&pauli(), 2, 3, 2, 2).unwrap();
        assert_eq!(strata(&r), [2]);
        assert!(!r[0].jm_ok);
        assert_eq!(r[1].km_witness, Some(Field::Rational.from_i64(16)));

        let one = rep(Field::Rational, &[&[&[3]], &[&[0]]]);
        assert_eq!(strata(&classify_stratum(&one, 2, 3, 2, 2).unwrap()), [1]);

        let r = classify_stratum(&nil(), 2, 3, 2, 2).unwrap();
        assert!(r[0].jm_ok && r[1].jm_ok);
        assert_eq!(strata(&r), [1]);
    }

    #[test]
    fn tuple_order() {
        // Candidates: e, x, y (lengths 0, 1, 1), two symmetric arguments.
        let t = tuples(&[0, 1, 1], 2, 1, &(0..2));
        assert_eq!(
            t,
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![0, 2],
                vec![1, 1],
                vec![1, 2],
                vec![2, 2]
            ]
        );
    }
}
