//! Exact linear algebra over a field: row reduction, nullspaces, inverses,
//! incremental spans and invariant-subspace spinning.

use crate::algebra::{Field, Ring, Scalar};
use crate::error::{Error, Result};
use crate::presentations::Representation;

use super::Matrix;

pub type Vector = Vec<Scalar>;

/// Reduced row echelon form of `rows` (each of length `ncols`), returning
/// the nonzero rows and their pivot columns.
pub fn rref(mut rows: Vec<Vector>, ncols: usize) -> (Vec<Vector>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for e in rows[r].iter_mut() {
            *e = e.mul(&inv);
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (e, pe) in rows[i].iter_mut().zip(&pivot_row) {
                    *e = e.sub(&f.mul(pe));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(m: &Matrix<Scalar>) -> usize {
    let rows = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    rref(rows, m.cols()).1.len()
}

/// Basis of `{ v : M v = 0 }`.
pub fn nullspace(m: &Matrix<Scalar>) -> Vec<Vector> {
    let field = m.field();
    let rows = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    let (reduced, pivots) = rref(rows, m.cols());
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![field.zero(); m.cols()];
            v[f] = field.one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = row[f].neg();
            }
            v
        })
        .collect()
}

pub fn inverse(m: &Matrix<Scalar>) -> Result<Matrix<Scalar>> {
    if !m.is_square() {
        return Err(Error::Dimension("inverse of a non-square matrix".into()));
    }
    let n = m.rows();
    let field = m.field();
    let rows = (0..n)
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            r
        })
        .collect();
    let (reduced, pivots) = rref(rows, 2 * n);
    if pivots.len() < n || pivots[n - 1] >= n {
        return Err(Error::DivisionByZero);
    }
    Ok(Matrix::from_fn(n, n, |i, j| reduced[i][n + j].clone()))
}

pub fn mat_vec(m: &Matrix<Scalar>, v: &[Scalar]) -> Vector {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .zip(v)
                .fold(v[0].zero_like(), |acc, (a, b)| acc.add(&a.mul(b)))
        })
        .collect()
}

/// Incrementally maintained span of vectors of a fixed length, kept in
/// echelon form so membership tests are a single reduction.
#[derive(Clone, Debug)]
pub struct Span {
    len: usize,
    echelon: Vec<(usize, Vector)>,
    basis: Vec<Vector>,
}

impl Span {
    pub fn new(len: usize) -> Self {
        Span {
            len,
            echelon: Vec::new(),
            basis: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.len
    }

    /// The inserted vectors that turned out independent, in insertion order.
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut v = v.to_vec();
        for (p, row) in &self.echelon {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (e, r) in v.iter_mut().zip(row) {
                    *e = e.sub(&f.mul(r));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Ring::is_zero)
    }

    /// Adds `v`; returns true when it enlarged the span.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.len, "span vector length");
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|e| !e.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero pivot");
        for e in r.iter_mut() {
            *e = e.mul(&inv);
        }
        for (_, row) in self.echelon.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (e, x) in row.iter_mut().zip(&r) {
                    *e = e.sub(&f.mul(x));
                }
            }
        }
        self.echelon.push((p, r));
        self.basis.push(v.to_vec());
        true
    }
}

/// Smallest subspace containing `seeds` and invariant under every matrix in
/// `gens` (acting on column vectors).
pub fn spin(seeds: &[Vector], gens: &[Matrix<Scalar>]) -> Span {
    let len = seeds
        .first()
        .map(Vec::len)
        .unwrap_or_else(|| gens[0].rows());
    let mut span = Span::new(len);
    let mut queue: Vec<Vector> = Vec::new();
    for s in seeds {
        if span.insert(s) {
            queue.push(s.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for g in gens {
            let w = mat_vec(g, &v);
            if span.insert(&w) {
                queue.push(w);
            }
        }
        if span.dim() == len {
            break;
        }
    }
    span
}

/// Basis of all `T` (of shape `dim A × dim B`) with `A(X_ℓ) T = T B(X_ℓ)`
/// for every generator ℓ. Empty when only the zero map intertwines.
pub fn solve_intertwiner(a: &Representation, b: &Representation) -> Result<Vec<Matrix<Scalar>>> {
    if a.generator_count() != b.generator_count() {
        return Err(Error::Dimension(format!(
            "generator counts differ: {} vs {}",
            a.generator_count(),
            b.generator_count()
        )));
    }
    if a.field() != b.field() {
        return Err(Error::FieldMismatch {
            left: a.field(),
            right: b.field(),
        });
    }
    let field: Field = a.field();
    let (p, q) = (a.dim(), b.dim());
    // Unknown T[i][j] sits at column i*q + j.
    let mut rows: Vec<Vector> = Vec::new();
    for (x, y) in a.images().iter().zip(b.images()) {
        for i in 0..p {
            for j in 0..q {
                let mut row = vec![field.zero(); p * q];
                // (X T)_{ij} = Σ_k X_{ik} T_{kj}
                for k in 0..p {
                    let e = &mut row[k * q + j];
                    *e = e.add(&x[(i, k)]);
                }
                // (T Y)_{ij} = Σ_k T_{ik} Y_{kj}
                for k in 0..q {
                    let e = &mut row[i * q + k];
                    *e = e.sub(&y[(k, j)]);
                }
                rows.push(row);
            }
        }
    }
    let basis = if rows.is_empty() {
        (0..p * q)
            .map(|c| {
                (0..p * q)
                    .map(|r| if r == c { field.one() } else { field.zero() })
                    .collect()
            })
            .collect()
    } else {
        let ncols = p * q;
        let m = Matrix::from_fn(rows.len(), ncols, |i, j| rows[i][j].clone());
        nullspace(&m)
    };
    Ok(basis
        .into_iter()
        .map(|v| Matrix::from_fn(p, q, |i, j| v[i * q + j].clone()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::int_matrix;

    fn q(rows: &[&[i64]]) -> Matrix<Scalar> {
        int_matrix(Field::Rational, rows)
    }

    fn irreducible_pair() -> Representation {
        Representation::new(vec![q(&[&[1, 0], &[0, -1]]), q(&[&[0, 1], &[1, 0]])]).unwrap()
    }

    #[test]
    fn inverse_and_nullspace() {
        let g = q(&[&[1, 1], &[0, 1]]);
        let gi = inverse(&g).unwrap();
        assert_eq!(g.mul(&gi), Matrix::identity(2, &Field::Rational.one()));
        assert!(inverse(&q(&[&[1, 2], &[2, 4]])).is_err());
        let ns = nullspace(&q(&[&[1, 2], &[2, 4]]));
        assert_eq!(ns.len(), 1);
        assert_eq!(rank(&q(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn intertwiner_of_irreducible_with_itself_is_scalar() {
        let a = irreducible_pair();
        let sols = solve_intertwiner(&a, &a).unwrap();
        assert_eq!(sols.len(), 1);
        assert!(sols[0].scalar_value().is_some());
    }

    #[test]
    fn intertwiner_to_zero_rep_is_trivial() {
        let a = irreducible_pair();
        let zero = Representation::new(vec![q(&[&[0]]), q(&[&[0]])]).unwrap();
        assert!(solve_intertwiner(&a, &zero).unwrap().is_empty());
    }

    #[test]
    fn intertwiner_finds_conjugator() {
        let a = irreducible_pair();
        let g = q(&[&[1, 1], &[0, 1]]);
        let b = a.conjugate(&g).unwrap();
        let sols = solve_intertwiner(&b, &a).unwrap();
        assert_eq!(sols.len(), 1);
        // b = g a g⁻¹ so b g = g a: g spans the solution space.
        let t = &sols[0];
        let ratio = t[(0, 0)].checked_div(&g[(0, 0)]).unwrap();
        assert_eq!(*t, g.scale(&ratio));
    }

    #[test]
    fn spin_finds_invariant_line() {
        let e12 = q(&[&[0, 1], &[0, 0]]);
        let f = Field::Rational;
        let span = spin(&[vec![f.one(), f.zero()]], std::slice::from_ref(&e12));
        assert_eq!(span.dim(), 1);
        let span = spin(&[vec![f.zero(), f.one()]], &[e12]);
        assert_eq!(span.dim(), 2);
    }
}
