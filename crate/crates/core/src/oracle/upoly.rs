//! Dense univariate polynomials over a field, lowest degree first.

use crate::algebra::{Field, Ring, Scalar};
use crate::matrices::{CharPoly, Matrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl UPoly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        UPoly { field, coeffs }
    }

    pub fn zero(field: Field) -> Self {
        UPoly::new(field, Vec::new())
    }

    pub fn one(field: Field) -> Self {
        UPoly::new(field, vec![field.one()])
    }

    /// The polynomial `x`.
    pub fn x(field: Field) -> Self {
        UPoly::new(field, vec![field.zero(), field.one()])
    }

    /// `λⁿ + c₁λⁿ⁻¹ + … + c_n`.
    pub fn from_charpoly(field: Field, cp: &CharPoly<Scalar>) -> Self {
        let mut coeffs: Vec<Scalar> = cp.coeffs().iter().rev().cloned().collect();
        coeffs.push(field.one());
        UPoly::new(field, coeffs)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lead(&self) -> Scalar {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().inv().expect("nonzero leading coefficient");
        UPoly::new(
            self.field,
            self.coeffs.iter().map(|c| c.mul(&inv)).collect(),
        )
    }

    pub fn add(&self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = self.field.zero();
        UPoly::new(
            self.field,
            (0..n)
                .map(|i| {
                    self.coeffs
                        .get(i)
                        .unwrap_or(&zero)
                        .add(rhs.coeffs.get(i).unwrap_or(&zero))
                })
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &UPoly) -> UPoly {
        self.add(&rhs.scale(&self.field.from_i64(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> UPoly {
        UPoly::new(self.field, self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn mul(&self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UPoly::new(self.field, out)
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, rhs: &UPoly) -> (UPoly, UPoly) {
        assert!(!rhs.is_zero(), "polynomial division by zero");
        let mut rem = self.coeffs.clone();
        let d = rhs.degree();
        if self.coeffs.len() <= d {
            return (UPoly::zero(self.field), self.clone());
        }
        let inv = rhs.lead().inv().expect("nonzero leading coefficient");
        let mut quot = vec![self.field.zero(); self.coeffs.len() - d];
        for k in (0..quot.len()).rev() {
            let c = rem[k + d].mul(&inv);
            if !c.is_zero() {
                for (j, b) in rhs.coeffs.iter().enumerate() {
                    rem[k + j] = rem[k + j].sub(&c.mul(b));
                }
            }
            quot[k] = c;
        }
        rem.truncate(d);
        (UPoly::new(self.field, quot), UPoly::new(self.field, rem))
    }

    pub fn rem(&self, rhs: &UPoly) -> UPoly {
        self.div_rem(rhs).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, rhs: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&self.field.from_i64(i as i64)))
                .collect(),
        )
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u128, m: &UPoly) -> UPoly {
        let mut acc = UPoly::one(self.field).rem(m);
        let mut base = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| acc.mul(x).add(c))
    }

    /// `f(A)` for a square matrix `A`.
    pub fn eval_matrix(&self, a: &Matrix<Scalar>) -> Matrix<Scalar> {
        let id = Matrix::identity(a.rows(), &self.field.one());
        self.coeffs.iter().rev().fold(
            Matrix::zeros(a.rows(), a.rows(), &self.field.one()),
            |acc, c| acc.mul(a).add(&id.scale(c)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(field: Field, c: &[i64]) -> UPoly {
        UPoly::new(field, c.iter().map(|&v| field.from_i64(v)).collect())
    }

    #[test]
    fn division_and_gcd() {
        let q = Field::Rational;
        // (x-1)(x-2) and (x-1)(x+3)
        let a = p(q, &[2, -3, 1]);
        let b = p(q, &[-3, 2, 1]);
        assert_eq!(a.gcd(&b), p(q, &[-1, 1]));
        let (quot, rem) = a.div_rem(&p(q, &[-1, 1]));
        assert_eq!(quot, p(q, &[-2, 1]));
        assert!(rem.is_zero());
    }

    #[test]
    fn fermat_in_quotient_ring() {
        let f7 = Field::prime(7).unwrap();
        let m = p(f7, &[1, 0, 1]);
        let x = UPoly::x(f7);
        // x^(7^2) ≡ x mod an irreducible quadratic over F_7.
        assert_eq!(x.pow_mod(49, &m), x);
    }
}
