//! Exact scalars: arbitrary-precision rationals and prime-field residues.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::Ring;
use crate::error::{Error, Result};

/// The coefficient field of a computation: ℚ or a prime field F_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Field {
    Rational,
    Prime(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// F_p, rejecting composite moduli. Moduli are capped at 2^32 so that
    /// products fit comfortably in a u64 before reduction.
    pub fn prime(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NotPrime { modulus: p });
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    /// True when every integer in `1..=n` is invertible.
    pub fn inverts_up_to(&self, n: usize) -> bool {
        match self {
            Field::Rational => true,
            Field::Prime(p) => (n as u64) < *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Modular {
                residue: v.rem_euclid(*p as i64) as u64,
                modulus: *p,
            },
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(*p));
                Scalar::Modular {
                    residue: r.to_u64().expect("residue below modulus"),
                    modulus: *p,
                }
            }
        }
    }

    /// The image of a rational number in this field.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rational => Ok(Scalar::Rational(q.clone())),
            Field::Prime(_) => {
                let num = self.from_bigint(q.numer());
                let den = self.from_bigint(q.denom());
                num.checked_div(&den)
            }
        }
    }

    /// Maps a scalar into this field. Rationals reduce modulo p; residues
    /// only map to their own field.
    pub fn coerce(&self, s: &Scalar) -> Result<Scalar> {
        match s {
            Scalar::Rational(q) => self.from_rational(q),
            Scalar::Modular { modulus, .. } if Field::Prime(*modulus) == *self => Ok(s.clone()),
            Scalar::Modular { .. } => Err(Error::FieldMismatch {
                left: s.field(),
                right: *self,
            }),
        }
    }

    /// Parses `a`, `-a` or `a/b` into this field.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let bad = |message: String| Error::Parse {
            line: 1,
            column: 1,
            message,
        };
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let num: BigInt = num
            .parse()
            .map_err(|_| bad(format!("invalid scalar {text:?}")))?;
        let den: BigInt = den
            .parse()
            .map_err(|_| bad(format!("invalid scalar {text:?}")))?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.from_rational(&BigRational::new(num, den))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::Rational);
        }
        let p = s
            .strip_prefix("Fp:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| Error::Parse {
                line: 1,
                column: 1,
                message: format!("unknown field {s:?}, expected \"Q\" or \"Fp:<p>\""),
            })?;
        Field::prime(p)
    }
}

impl TryFrom<String> for Field {
    type Error = Error;

    fn try_from(value: String) -> Result<Self> {
        value.parse()
    }
}

impl From<Field> for String {
    fn from(f: Field) -> String {
        f.to_string()
    }
}

/// An element of ℚ (always in lowest terms) or of F_p (residue in `[0, p)`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { residue: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { residue, .. } => *residue == 1,
        }
    }

    fn check(&self, rhs: &Scalar) -> Result<()> {
        if self.field() == rhs.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.field(),
                right: rhs.field(),
            })
        }
    }

    pub fn checked_add(&self, rhs: &Scalar) -> Result<Scalar> {
        self.check(rhs)?;
        Ok(Ring::add(self, rhs))
    }

    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar> {
        self.check(rhs)?;
        Ok(Ring::mul(self, rhs))
    }

    pub fn inv(&self) -> Result<Scalar> {
        if Ring::is_zero(self) {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { residue, modulus } => Scalar::Modular {
                residue: pow_mod(*residue, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        self.check(rhs)?;
        Ok(Ring::mul(self, &rhs.inv()?))
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = Ring::mul(&acc, &base);
            }
            base = Ring::mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// The integer value when this is a rational with denominator 1.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self {
            Scalar::Rational(q) if q.is_integer() => Some(q.to_integer()),
            Scalar::Rational(_) => None,
            Scalar::Modular { residue, .. } => Some(BigInt::from(*residue)),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Modular { .. } => None,
        }
    }

    /// Plain value text without the modulus: `a`, `a/b`, or the residue.
    pub fn value_string(&self) -> String {
        match self {
            Scalar::Rational(q) => format_rational(q),
            Scalar::Modular { residue, .. } => residue.to_string(),
        }
    }

    /// True for a rational whose rendering starts with a minus sign.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(q) if q.is_negative())
    }
}

fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => f.write_str(&format_rational(q)),
            Scalar::Modular { residue, modulus } => write!(f, "{residue} mod {modulus}"),
        }
    }
}

fn residues(a: &Scalar, b: &Scalar) -> (u64, u64, u64) {
    match (a, b) {
        (
            Scalar::Modular {
                residue: x,
                modulus: p,
            },
            Scalar::Modular {
                residue: y,
                modulus: q,
            },
        ) if p == q => (*x, *y, *p),
        _ => panic!(
            "scalar arithmetic across fields {} and {}",
            a.field(),
            b.field()
        ),
    }
}

fn modular(residue: u64, modulus: u64) -> Scalar {
    Scalar::Modular { residue, modulus }
}

/// Panics when the operands belong to different fields; the `checked_*`
/// methods report that case as [`Error::FieldMismatch`] instead.
impl Ring for Scalar {
    fn zero_like(&self) -> Self {
        self.field().zero()
    }

    fn one_like(&self) -> Self {
        self.field().one()
    }

    fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { residue, .. } => *residue == 0,
        }
    }

    fn add(&self, rhs: &Self) -> Self {
        if let (Scalar::Rational(a), Scalar::Rational(b)) = (self, rhs) {
            return Scalar::Rational(a + b);
        }
        let (a, b, p) = residues(self, rhs);
        modular((a + b) % p, p)
    }

    fn sub(&self, rhs: &Self) -> Self {
        if let (Scalar::Rational(a), Scalar::Rational(b)) = (self, rhs) {
            return Scalar::Rational(a - b);
        }
        let (a, b, p) = residues(self, rhs);
        modular((a + p - b) % p, p)
    }

    fn mul(&self, rhs: &Self) -> Self {
        if let (Scalar::Rational(a), Scalar::Rational(b)) = (self, rhs) {
            return Scalar::Rational(a * b);
        }
        let (a, b, p) = residues(self, rhs);
        modular(mul_mod(a, b, p), p)
    }

    fn neg(&self) -> Self {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { residue, modulus } => Scalar::Modular {
                residue: (modulus - residue) % modulus,
                modulus: *modulus,
            },
        }
    }

    fn scale(&self, c: &Scalar) -> Self {
        Ring::mul(self, c)
    }

    fn field(&self) -> Field {
        Scalar::field(self)
    }
}
