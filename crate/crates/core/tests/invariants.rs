use proptest::prelude::*;

use pi_atlas::algebra::CPoly;
use pi_atlas::fingerprint::{blowup, default_bound, fingerprints_equal, jm_membership, psi, theta};
use pi_atlas::genmat::{generic_image, hm_generators, point, specialize_block, BlockSpec};
use pi_atlas::oracle::{burnside_irreducible, composition_factors, semisimplification_equal};
use pi_atlas::{sampling, Field, NCPoly, Representation, Ring, Word};

fn field_of(k: u8) -> Field {
    match k % 4 {
        0 => Field::Rational,
        1 => Field::prime(5).unwrap(),
        2 => Field::prime(7).unwrap(),
        _ => Field::prime(11).unwrap(),
    }
}

fn rep(n: usize, field: Field, seed: u64) -> Representation {
    sampling::representation(n, 2, field, 3, &mut sampling::rng(seed))
}

fn word(letters: &[u8]) -> Word {
    Word::new(letters.iter().map(|&l| 1 + (l % 2) as usize).collect())
}

/// An entry of the generic image of a word, as a commutative polynomial.
fn generic_entry(letters: &[u8], n: usize, at: (usize, usize), field: Field) -> CPoly {
    let g = generic_image(&NCPoly::monomial(field.one(), word(letters)), n, field).unwrap();
    g[at].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn fingerprint_is_conjugation_invariant(n in 1usize..=3, k in 0u8..4, seed in any::<u64>()) {
        let field = field_of(k);
        let r = rep(n, field, seed);
        let g = sampling::invertible(n, field, 5, &mut sampling::rng(seed ^ 1));
        let bound = default_bound(n, 8);
        let a = theta(&r, bound).unwrap();
        let b = theta(&r.conjugate(&g).unwrap(), bound).unwrap();
        prop_assert!(fingerprints_equal(&a, &b).unwrap());
        prop_assert_eq!(a.to_string(), b.to_string());
    }

    #[test]
    fn oracle_equivalence_is_reflexive_and_symmetric(
        n in 1usize..=3, k in 1u8..4, s1 in any::<u64>(), s2 in any::<u64>()
    ) {
        let field = field_of(k);
        let (a, b) = (rep(n, field, s1), rep(n, field, s2));
        prop_assert!(semisimplification_equal(&a, &a).unwrap());
        prop_assert_eq!(semisimplification_equal(&a, &b).unwrap(), semisimplification_equal(&b, &a).unwrap());
    }

    #[test]
    fn oracle_equivalence_is_transitive_through_direct_sums(
        k in 1u8..4, s1 in any::<u64>(), s2 in any::<u64>()
    ) {
        let field = field_of(k);
        let (a, b) = (rep(1, field, s1), rep(2, field, s2));
        let ab = a.direct_sum(&b).unwrap();
        let ba = b.direct_sum(&a).unwrap();
        let g = sampling::invertible(3, field, 5, &mut sampling::rng(s1 ^ s2));
        let conj = ba.conjugate(&g).unwrap();
        prop_assert!(semisimplification_equal(&ab, &ba).unwrap());
        prop_assert!(semisimplification_equal(&ba, &conj).unwrap());
        prop_assert!(semisimplification_equal(&ab, &conj).unwrap());
    }

    #[test]
    fn composition_factor_dims_sum_to_dim(n in 1usize..=4, k in 1u8..4, seed in any::<u64>()) {
        let r = rep(n, field_of(k), seed);
        let cf = composition_factors(&r).unwrap();
        prop_assert_eq!(cf.total_dim(), n);
        prop_assert_eq!(cf.dims().iter().sum::<usize>(), n);
        let ss = cf.semisimple().unwrap();
        prop_assert!(semisimplification_equal(&r, &ss).unwrap());
    }

    #[test]
    fn specialize_block_is_a_ring_map(
        (m, big) in prop::sample::select(vec![(1usize, 2usize), (1, 3), (2, 2), (2, 4)]),
        u in prop::collection::vec(any::<u8>(), 1..3),
        v in prop::collection::vec(any::<u8>(), 1..3),
        i in 0usize..4, j in 0usize..4,
    ) {
        let field = Field::Rational;
        let spec = BlockSpec::new(m, big).unwrap();
        let at = (i % big, j % big);
        let a = generic_entry(&u, big, at, field);
        let b = generic_entry(&v, big, (at.1, at.0), field);
        let s = |c: &CPoly| specialize_block(c, &spec).unwrap();
        prop_assert_eq!(s(&a.try_add(&b).unwrap()), s(&a).try_add(&s(&b)).unwrap());
        prop_assert_eq!(s(&a.try_mul(&b).unwrap()), s(&a).try_mul(&s(&b)).unwrap());
        prop_assert_eq!(s(&CPoly::one(field)), CPoly::one(field));
    }

    #[test]
    fn kernel_generators_vanish_on_blowups(
        (m, big) in prop::sample::select(vec![(1usize, 2usize), (1, 3), (2, 2), (2, 4)]),
        k in 0u8..4, seed in any::<u64>(),
    ) {
        let field = field_of(k);
        let spec = BlockSpec::new(m, big).unwrap();
        let b = blowup(&rep(m, field, seed), big).unwrap();
        let at = point(&b);
        for g in hm_generators(&spec, 1..=2, field) {
            prop_assert!(specialize_block(&g, &spec).unwrap().is_zero());
            prop_assert!(g.eval(&at).unwrap().is_zero());
        }
    }

    #[test]
    fn blowups_land_in_their_stratum(n in 1usize..=2, k in 0u8..4, seed in any::<u64>()) {
        let field = field_of(k);
        let r = rep(n, field, seed);
        let fp = theta(&blowup(&r, 2 * n).unwrap(), default_bound(n, 8)).unwrap();
        prop_assert!(jm_membership(&fp, n).unwrap());
        if burnside_irreducible(&r) {
            prop_assert_eq!(psi(&r, 2 * n, 3).unwrap().dim(), 2 * n);
        }
    }

    #[test]
    fn word_images_multiply(
        u in prop::collection::vec(any::<u8>(), 0..4),
        v in prop::collection::vec(any::<u8>(), 0..4),
        n in 1usize..=3, k in 0u8..4, seed in any::<u64>(),
    ) {
        let r = rep(n, field_of(k), seed);
        let (wu, wv) = (word(&u), word(&v));
        prop_assert_eq!(
            r.word_image(&wu.concat(&wv)).unwrap(),
            r.word_image(&wu).unwrap().mul(&r.word_image(&wv).unwrap())
        );
    }
}
