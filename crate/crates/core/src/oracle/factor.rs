//! Distinct irreducible factors of univariate polynomials: Cantor–Zassenhaus
//! over F_p, rational roots over ℚ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng as _;
use rand_chacha::ChaCha8Rng;

use super::upoly::UPoly;
use crate::algebra::{Field, Ring, Scalar};
use crate::error::{Error, Result};

/// The distinct monic irreducible factors of `f`, sorted by degree.
///
/// Over ℚ only factors of degree ≤ 3 can be certified (a polynomial of
/// degree 2 or 3 without rational roots is irreducible); a root-free
/// remainder of higher degree is a give-up.
pub fn irreducible_factors(f: &UPoly, rng: &mut ChaCha8Rng) -> Result<Vec<UPoly>> {
    if f.is_zero() {
        return Err(Error::GaveUp("factoring the zero polynomial".into()));
    }
    let mut out = match f.field() {
        Field::Prime(_) => {
            let mut out = Vec::new();
            for (g, d) in distinct_degree(&radical(f)) {
                equal_degree(&g, d, rng, &mut out)?;
            }
            out
        }
        Field::Rational => rational_factors(f)?,
    };
    out.sort_by(|a, b| {
        a.degree().cmp(&b.degree()).then_with(|| {
            a.coeffs()
                .iter()
                .map(Scalar::value_string)
                .cmp(b.coeffs().iter().map(Scalar::value_string))
        })
    });
    Ok(out)
}

/// Product of the distinct monic irreducible factors of `f` over F_p.
fn radical(f: &UPoly) -> UPoly {
    let field = f.field();
    if f.degree() == 0 {
        return UPoly::one(field);
    }
    let d = f.derivative();
    if d.is_zero() {
        // f(x) = h(x^p); over F_p, h(x^p) = h(x)^p.
        let p = field.characteristic() as usize;
        let h = UPoly::new(field, f.coeffs().iter().step_by(p).cloned().collect());
        return radical(&h);
    }
    let g = f.gcd(&d);
    let r = f.div_rem(&g).0.monic();
    let rg = radical(&g);
    // lcm(r, rad g)
    r.mul(&rg).div_rem(&r.gcd(&rg)).0.monic()
}

/// Splits a squarefree monic polynomial into products of irreducibles of
/// equal degree.
fn distinct_degree(f: &UPoly) -> Vec<(UPoly, usize)> {
    let field = f.field();
    let p = field.characteristic() as u128;
    let x = UPoly::x(field);
    let mut rest = f.monic();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut d = 0;
    while rest.degree() >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(p, &rest);
        let g = rest.gcd(&h.sub(&x));
        if g.degree() > 0 {
            rest = rest.div_rem(&g).0.monic();
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    if rest.degree() > 0 {
        let deg = rest.degree();
        out.push((rest, deg));
    }
    out
}

fn equal_degree(f: &UPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<UPoly>) -> Result<()> {
    if f.degree() == d {
        out.push(f.monic());
        return Ok(());
    }
    let field = f.field();
    let p = field.characteristic();
    let q = (p as u128)
        .checked_pow(d as u32)
        .ok_or_else(|| Error::GaveUp("extension field too large for splitting".into()))?;
    for _ in 0..200 {
        let a = UPoly::new(
            field,
            (0..f.degree())
                .map(|_| field.from_i64(rng.gen_range(0..p) as i64))
                .collect(),
        );
        if a.degree() == 0 {
            continue;
        }
        let b = if p == 2 {
            // Trace map of F_{2^d} over F_2.
            let mut acc = a.clone();
            let mut t = a.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            acc
        } else {
            a.pow_mod((q - 1) / 2, f).sub(&UPoly::one(field))
        };
        let g = f.gcd(&b);
        if g.degree() > 0 && g.degree() < f.degree() {
            let h = f.div_rem(&g).0.monic();
            equal_degree(&g, d, rng, out)?;
            equal_degree(&h, d, rng, out)?;
            return Ok(());
        }
    }
    Err(Error::GaveUp(
        "equal-degree splitting did not converge".into(),
    ))
}

const DIVISOR_LIMIT: u64 = 1 << 40;

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n = n.abs();
    let n = n
        .to_u64()
        .filter(|&v| v <= DIVISOR_LIMIT)
        .ok_or_else(|| Error::GaveUp("rational root search: coefficient too large".into()))?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d * d != n {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

fn rational_factors(f: &UPoly) -> Result<Vec<UPoly>> {
    let field = Field::Rational;
    let mut rest = f.monic();
    let mut out = Vec::new();
    // x divides f: strip it first so the constant term is nonzero.
    if rest.coeffs()[0].is_zero() {
        out.push(UPoly::x(field));
        while rest.degree() > 0 && rest.coeffs()[0].is_zero() {
            rest = UPoly::new(field, rest.coeffs()[1..].to_vec());
        }
    }
    loop {
        if rest.degree() == 0 {
            break;
        }
        if rest.degree() == 1 {
            out.push(rest);
            break;
        }
        match rational_root(&rest)? {
            Some(r) => {
                let lin = UPoly::new(field, vec![Scalar::Rational(-r), field.one()]);
                while rest.rem(&lin).is_zero() {
                    rest = rest.div_rem(&lin).0;
                }
                out.push(lin);
            }
            None if rest.degree() <= 3 => {
                out.push(rest);
                break;
            }
            None => {
                return Err(Error::GaveUp(format!(
                    "no rational root in a degree-{} factor over Q",
                    rest.degree()
                )))
            }
        }
    }
    out.dedup();
    Ok(out)
}

fn rational_root(f: &UPoly) -> Result<Option<BigRational>> {
    // Scale to integer coefficients.
    let denom_lcm = f.coeffs().iter().fold(BigInt::one(), |acc, c| {
        acc.lcm(c.as_rational().expect("rational coefficient").denom())
    });
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| {
            (c.as_rational().unwrap() * BigRational::from_integer(denom_lcm.clone())).to_integer()
        })
        .collect();
    let a0 = &ints[0];
    let an = ints.last().unwrap();
    if a0.is_zero() {
        return Ok(Some(BigRational::zero()));
    }
    for q in divisors(an)? {
        for p in divisors(a0)? {
            for sign in [1, -1] {
                let r = BigRational::new(p.clone() * sign, q.clone());
                if f.eval(&Scalar::Rational(r.clone())).is_zero() {
                    return Ok(Some(r));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn p(field: Field, c: &[i64]) -> UPoly {
        UPoly::new(field, c.iter().map(|&v| field.from_i64(v)).collect())
    }

    fn product(fs: &[UPoly]) -> UPoly {
        fs.iter().fold(UPoly::one(fs[0].field()), |a, b| a.mul(b))
    }

    #[test]
    fn factors_over_f7() {
        let f7 = Field::prime(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        // (x+1)^2 (x^2+1)(x-3)
        let f = product(&[
            p(f7, &[1, 1]),
            p(f7, &[1, 1]),
            p(f7, &[1, 0, 1]),
            p(f7, &[-3, 1]),
        ]);
        let fs = irreducible_factors(&f, &mut rng).unwrap();
        assert_eq!(fs.len(), 3);
        assert_eq!(fs.iter().map(UPoly::degree).collect::<Vec<_>>(), [1, 1, 2]);
        for g in &fs {
            assert!(f.rem(g).is_zero());
        }
    }

    #[test]
    fn splits_products_of_quadratics() {
        let f5 = Field::prime(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        // x^2+2 and x^2+3 are irreducible over F_5.
        let f = product(&[p(f5, &[2, 0, 1]), p(f5, &[3, 0, 1])]);
        let fs = irreducible_factors(&f, &mut rng).unwrap();
        assert_eq!(fs, vec![p(f5, &[2, 0, 1]), p(f5, &[3, 0, 1])]);
    }

    #[test]
    fn rational_roots() {
        let q = Field::Rational;
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        // (2x-1)(x^2+1) x
        let f = product(&[p(q, &[-1, 2]), p(q, &[1, 0, 1]), p(q, &[0, 1])]);
        let fs = irreducible_factors(&f, &mut rng).unwrap();
        assert_eq!(fs.len(), 3);
        assert!(fs.contains(&p(q, &[1, 0, 1])));
        let quartic = product(&[p(q, &[1, 0, 1]), p(q, &[2, 0, 1])]);
        assert!(matches!(
            irreducible_factors(&quartic, &mut rng),
            Err(Error::GaveUp(_))
        ));
    }
}
