//! Built-in example presentations with seeded generators of irreducible
//! representations.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use pi_atlas::matrices::Matrix;
use pi_atlas::oracle::burnside_irreducible;
use pi_atlas::presentations::pi_multiple;
use pi_atlas::{sampling, Field, Presentation, Representation, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `xy + yx = 0` over ℚ or F_p.
    QuantumPlane,
    Free,
    Commutative,
}

#[derive(Clone, Copy, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub text: &'static str,
    pub family: Family,
}

pub const CORPUS: [CorpusEntry; 3] = [
    CorpusEntry {
        name: "qplane",
        text: include_str!("../corpus/qplane.alg"),
        family: Family::QuantumPlane,
    },
    CorpusEntry {
        name: "free2",
        text: include_str!("../corpus/free2.alg"),
        family: Family::Free,
    },
    CorpusEntry {
        name: "commutative",
        text: include_str!("../corpus/commutative.alg"),
        family: Family::Commutative,
    },
];

/// Looks up `name` or `name.alg`.
pub fn lookup(name: &str) -> Option<&'static CorpusEntry> {
    let stem = name.strip_suffix(".alg").unwrap_or(name);
    CORPUS.iter().find(|e| e.name == stem)
}

impl CorpusEntry {
    pub fn presentation(&self) -> Presentation {
        Presentation::parse(self.text).expect("built-in presentation parses")
    }

    /// Declared dimension bound.
    pub fn d(&self) -> usize {
        self.presentation().bound().unwrap_or(1)
    }

    /// `lcm(1..=d)`.
    pub fn n(&self) -> usize {
        pi_multiple(self.d())
    }

    /// `count` absolutely irreducible representations, reproducible from `seed`.
    pub fn sample(&self, count: usize, seed: u64, field: Field) -> Vec<Representation> {
        let mut rng = sampling::rng(seed);
        let d = self.d();
        (0..count)
            .map(|_| match self.family {
                Family::QuantumPlane => quantum_plane(&mut rng, field),
                Family::Commutative => {
                    let a = sampling::scalar(field, sampling::DEFAULT_BOX, &mut rng);
                    let b = sampling::scalar(field, sampling::DEFAULT_BOX, &mut rng);
                    Representation::new(vec![Matrix::diagonal(&[a]), Matrix::diagonal(&[b])])
                        .expect("1-dimensional")
                }
                Family::Free => loop {
                    let n = rng.gen_range(1..=d);
                    let r = sampling::representation(n, 2, field, 3, &mut rng);
                    if burnside_irreducible(&r) {
                        break r;
                    }
                },
            })
            .collect()
    }
}

fn nonzero(field: Field, rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let c = sampling::scalar(field, sampling::DEFAULT_BOX, rng);
        if !pi_atlas::Ring::is_zero(&c) {
            return c;
        }
    }
}

/// One third each of `(a, 0)`, `(0, b)` and 2-dimensional
/// `x = diag(a, −a)`, `y = [[0, b], [c, 0]]` with `a, b, c ≠ 0`.
fn quantum_plane(rng: &mut ChaCha8Rng, field: Field) -> Representation {
    let one = |v: Scalar| Matrix::diagonal(&[v]);
    let images = match rng.gen_range(0..3) {
        0 => vec![
            one(sampling::scalar(field, sampling::DEFAULT_BOX, rng)),
            one(field.zero()),
        ],
        1 => vec![
            one(field.zero()),
            one(sampling::scalar(field, sampling::DEFAULT_BOX, rng)),
        ],
        _ => {
            let (a, b, c) = (
                nonzero(field, rng),
                nonzero(field, rng),
                nonzero(field, rng),
            );
            let z = field.zero();
            vec![
                Matrix::diagonal(&[a.clone(), pi_atlas::Ring::neg(&a)]),
                Matrix::from_rows(vec![vec![z.clone(), b], vec![c, z]]).expect("2×2"),
            ]
        }
    };
    Representation::new(images).expect("square images")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_validate_and_are_irreducible() {
        for e in &CORPUS {
            let p = e.presentation();
            for field in [Field::Rational, Field::prime(7).unwrap()] {
                for r in e.sample(30, 11, field) {
                    assert!(p.validate(&r).unwrap().is_ok(), "{}: {r}", e.name);
                    assert!(burnside_irreducible(&r));
                    assert!(r.dim() <= e.d());
                }
            }
        }
    }

    #[test]
    fn ambient_sizes() {
        assert_eq!(lookup("qplane.alg").unwrap().n(), 2);
        assert_eq!(lookup("commutative").unwrap().n(), 1);
        assert!(lookup("nope").is_none());
    }
}
