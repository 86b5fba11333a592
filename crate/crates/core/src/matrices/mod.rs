//! Dense matrices over any [`Ring`], the division-free Berkowitz
//! characteristic polynomial, and Newton's identities.

use std::fmt;
use std::ops::Index;

use crate::algebra::{Field, Ring, Scalar};
use crate::error::{Error, Result};

pub mod linalg;

pub use linalg::solve_intertwiner;

/// A dense row-major matrix with at least one row and one column.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if nrows == 0 || ncols == 0 {
            return Err(Error::Dimension("matrix must be non-empty".into()));
        }
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Dimension("ragged matrix rows".into()));
        }
        let entries: Vec<R> = rows.into_iter().flatten().collect();
        let field = entries[0].field();
        if entries.iter().any(|e| e.field() != field) {
            return Err(Error::Dimension(
                "matrix entries from different fields".into(),
            ));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            entries,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        assert!(rows > 0 && cols > 0, "matrix must be non-empty");
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize, proto: &R) -> Self {
        let zero = proto.zero_like();
        Self::from_fn(rows, cols, |_, _| zero.clone())
    }

    pub fn identity(n: usize, proto: &R) -> Self {
        let (zero, one) = (proto.zero_like(), proto.one_like());
        Self::from_fn(n, n, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    /// Diagonal matrix with the given entries.
    pub fn diagonal(diag: &[R]) -> Self {
        let zero = diag[0].zero_like();
        Self::from_fn(diag.len(), diag.len(), |i, j| {
            if i == j {
                diag[i].clone()
            } else {
                zero.clone()
            }
        })
    }

    /// Block-diagonal matrix with the given square blocks down the diagonal.
    pub fn block_diagonal(blocks: &[Matrix<R>]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut out = Matrix::zeros(n, n, &blocks[0].entries[0]);
        let mut offset = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(offset + i, offset + j, b[(i, j)].clone());
                }
            }
            offset += b.rows;
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn field(&self) -> Field {
        self.entries[0].field()
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map<S: Ring>(&self, f: impl Fn(&R) -> Result<S>) -> Result<Matrix<S>> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(self.mul(rhs))
    }

    /// Matrix product. Panics on incompatible shapes.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut entries = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            let row = self.row(i);
            for j in 0..rhs.cols {
                let mut acc = row[0].mul(&rhs.entries[j]);
                for (k, a) in row.iter().enumerate().skip(1) {
                    let b = &rhs.entries[k * rhs.cols + j];
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                entries.push(acc);
            }
        }
        Matrix {
            rows: self.rows,
            cols: rhs.cols,
            entries,
        }
    }

    fn zip(&self, rhs: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix shape mismatch"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.zip(rhs, R::add)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.zip(rhs, R::sub)
    }

    pub fn neg(&self) -> Self {
        self.map(R::neg)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        self.map(|e| e.scale(c))
    }

    pub fn scale_by(&self, c: &R) -> Self {
        self.map(|e| e.mul(c))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(R::is_zero)
    }

    pub fn trace(&self) -> R {
        assert!(self.is_square(), "trace of a non-square matrix");
        (1..self.rows).fold(self.entries[0].clone(), |acc, i| acc.add(&self[(i, i)]))
    }

    /// The common diagonal value when this is a scalar multiple of the identity.
    pub fn scalar_value(&self) -> Option<R> {
        if !self.is_square() {
            return None;
        }
        let d = &self[(0, 0)];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = &self[(i, j)];
                if (i == j && e != d) || (i != j && !e.is_zero()) {
                    return None;
                }
            }
        }
        Some(d.clone())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Matrix::identity(self.rows, &self.entries[0]);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Characteristic polynomial `det(λI − M)` by Berkowitz's division-free
    /// recurrence over leading principal submatrices.
    pub fn charpoly(&self) -> Result<CharPoly<R>> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "charpoly of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let one = self.entries[0].one_like();
        // Coefficients of the running charpoly, leading coefficient first.
        let mut poly: Vec<R> = vec![one.clone()];
        for r in 0..n {
            // Column of the Toeplitz matrix: 1, -a_rr, -R C, -R A C, -R A^2 C, ...
            let mut toeplitz = Vec::with_capacity(r + 2);
            toeplitz.push(one.clone());
            toeplitz.push(self[(r, r)].neg());
            let mut col: Vec<R> = (0..r).map(|i| self[(i, r)].clone()).collect();
            for k in 0..r {
                let dot = (0..r).fold(one.zero_like(), |acc, j| {
                    acc.add(&self[(r, j)].mul(&col[j]))
                });
                toeplitz.push(dot.neg());
                if k + 1 < r {
                    col = (0..r)
                        .map(|i| {
                            (0..r).fold(one.zero_like(), |acc, j| {
                                acc.add(&self[(i, j)].mul(&col[j]))
                            })
                        })
                        .collect();
                }
            }
            poly = (0..r + 2)
                .map(|i| {
                    (0..=i.min(r)).fold(one.zero_like(), |acc, j| {
                        acc.add(&toeplitz[i - j].mul(&poly[j]))
                    })
                })
                .collect();
        }
        poly.remove(0);
        Ok(CharPoly { coeffs: poly })
    }
}

impl<R> Index<(usize, usize)> for Matrix<R> {
    type Output = R;

    fn index(&self, (i, j): (usize, usize)) -> &R {
        &self.entries[i * self.cols + j]
    }
}

impl<R: fmt::Display> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entries[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Coefficients `c_1..c_n` of a monic degree-n polynomial
/// `λⁿ + c₁λⁿ⁻¹ + … + c_n`; for a matrix M this is `det(λI − M)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> CharPoly<R> {
    pub fn new(coeffs: Vec<R>) -> Self {
        CharPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Substitutes a square matrix, Horner style.
    pub fn eval_matrix(&self, m: &Matrix<R>) -> Matrix<R> {
        let proto = &m.entries()[0];
        let id = Matrix::identity(m.rows(), proto);
        self.coeffs
            .iter()
            .fold(id.clone(), |acc, c| acc.mul(m).add(&id.scale_by(c)))
    }
}

impl<R: fmt::Display> fmt::Display for CharPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Converts power sums `p_1..p_n` of n formal eigenvalues into the
/// coefficients `c_i = (−1)^i e_i` of their monic polynomial.
///
/// Newton's identities divide by `1..n`, so prime fields with `p ≤ n` are
/// refused rather than answered wrongly.
pub fn newton_elementary(powersums: &[Scalar], field: Field) -> Result<CharPoly<Scalar>> {
    let n = powersums.len();
    if !field.inverts_up_to(n) {
        return Err(Error::UnsupportedCharacteristic {
            what: "Newton's identities",
            bound: n,
            field,
        });
    }
    if let Some(bad) = powersums.iter().find(|p| p.field() != field) {
        return Err(Error::FieldMismatch {
            left: bad.field(),
            right: field,
        });
    }
    // k e_k = Σ_{i=1..k} (−1)^{i−1} e_{k−i} p_i
    let mut e = vec![field.one()];
    for k in 1..=n {
        let mut acc = field.zero();
        for i in 1..=k {
            let term = e[k - i].mul(&powersums[i - 1]);
            acc = if i % 2 == 1 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
        e.push(acc.checked_div(&field.from_i64(k as i64))?);
    }
    Ok(CharPoly {
        coeffs: e
            .into_iter()
            .enumerate()
            .skip(1)
            .map(|(i, ei)| if i % 2 == 1 { ei.neg() } else { ei })
            .collect(),
    })
}

/// Integer matrix over the given field, for tests and examples.
pub fn int_matrix(field: Field, rows: &[&[i64]]) -> Matrix<Scalar> {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect(),
    )
    .expect("well-formed integer matrix")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Matrix<Scalar> {
        int_matrix(Field::Rational, rows)
    }

    fn ints(c: &CharPoly<Scalar>) -> Vec<String> {
        c.coeffs().iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn charpoly_examples() {
        assert_eq!(
            ints(&q(&[&[1, 0], &[0, 1]]).charpoly().unwrap()),
            ["-2", "1"]
        );
        assert_eq!(
            ints(&q(&[&[0, 1], &[1, 0]]).charpoly().unwrap()),
            ["0", "-1"]
        );
        assert_eq!(
            ints(&q(&[&[0, -1], &[1, 0]]).charpoly().unwrap()),
            ["0", "1"]
        );
        assert_eq!(
            ints(&q(&[&[2, 0, 0], &[1, 3, 0], &[4, 5, 6]]).charpoly().unwrap()),
            ["-11", "36", "-36"]
        );
    }

    #[test]
    fn charpoly_rejects_rectangular() {
        let m = q(&[&[1, 2, 3], &[4, 5, 6]]);
        assert!(matches!(m.charpoly(), Err(Error::Dimension(_))));
    }

    #[test]
    fn newton_examples() {
        let f = Field::Rational;
        let c = newton_elementary(&[f.from_i64(3), f.from_i64(5)], f).unwrap();
        assert_eq!(ints(&c), ["-3", "2"]);
        let c = newton_elementary(&[f.from_i64(7)], f).unwrap();
        assert_eq!(ints(&c), ["-7"]);
        let c = newton_elementary(&[f.zero(), f.zero()], f).unwrap();
        assert_eq!(ints(&c), ["0", "0"]);
    }

    #[test]
    fn newton_refuses_small_characteristic() {
        let f3 = Field::prime(3).unwrap();
        let sums = vec![f3.one(); 3];
        assert!(matches!(
            newton_elementary(&sums, f3),
            Err(Error::UnsupportedCharacteristic { .. })
        ));
        assert!(newton_elementary(&sums[..2], f3).is_ok());
    }

    #[test]
    fn cayley_hamilton_small() {
        let m = q(&[&[1, 2], &[3, 4]]);
        assert!(m.charpoly().unwrap().eval_matrix(&m).is_zero());
    }

    #[test]
    fn scalar_value_and_pow() {
        let m = q(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.pow(2).scalar_value(), Some(Field::Rational.one()));
        assert_eq!(m.scalar_value(), None);
    }
}
