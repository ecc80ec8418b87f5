//! Property tests for congruence semantics.

use congruence::{
    check_congruence, degenerate_params, modulus_for, sample_params, verify_crt_relations,
    BigRational, QModulusClaim, QPoly, QRat,
};
use num::BigInt;
use proptest::prelude::*;

fn small_poly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-6i64..=6, 0..6).prop_map(|c| QPoly::from_ints(&c))
}

fn small_rat() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=9)
        .prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Adding a multiple of the modulus to one side never changes the verdict.
    #[test]
    fn verdict_invariant_under_adding_modulus_multiples(h in small_poly(), g in small_poly()) {
        let m = modulus_for(QModulusClaim::Thm1, 3, None, None).unwrap();
        let lhs = QRat::from_poly(h);
        let shifted = lhs.add(&QRat::from_poly(m.product().mul(&g)));
        let v1 = check_congruence(&lhs, &QRat::zero(), &m);
        let v2 = check_congruence(&shifted, &QRat::zero(), &m);
        prop_assert_eq!(v1.pass, v2.pass);
        prop_assert_eq!(v1.denominator_coprime, v2.denominator_coprime);
        prop_assert_eq!(v1.remainder_zero, v2.remainder_zero);
    }

    /// Swapping the two sides never changes the verdict.
    #[test]
    fn verdict_symmetric_in_the_two_sides(h1 in small_poly(), h2 in small_poly()) {
        let m = modulus_for(QModulusClaim::Lemma1, 5, None, None).unwrap();
        let lhs = QRat::from_poly(h1);
        let rhs = QRat::from_poly(h2);
        let v1 = check_congruence(&lhs, &rhs, &m);
        let v2 = check_congruence(&rhs, &lhs, &m);
        prop_assert_eq!(v1.pass, v2.pass);
        prop_assert_eq!(v1.denominator_coprime, v2.denominator_coprime);
        prop_assert_eq!(v1.remainder_zero, v2.remainder_zero);
    }

    /// A difference with a pole at the modulus is never reported as a pass,
    /// and is flagged through the dedicated field.
    #[test]
    fn pole_at_modulus_never_passes(c in 1i64..=20) {
        let m = modulus_for(QModulusClaim::Thm1, 3, None, None).unwrap();
        let lhs = QRat::new(
            QPoly::constant(BigRational::from(BigInt::from(c))),
            exact_poly::cyclotomic(3).unwrap(),
        )
        .unwrap();
        let v = check_congruence(&lhs, &QRat::zero(), &m);
        prop_assert!(!v.pass);
        prop_assert!(!v.denominator_coprime);
    }

    /// Sampling is total, reproducible, and avoids the excluded set for
    /// arbitrary seeds.
    #[test]
    fn sampling_valid_for_arbitrary_seeds(seed in any::<u64>()) {
        let pairs = sample_params(seed, 5);
        prop_assert_eq!(pairs.len(), 5);
        prop_assert_eq!(&pairs, &sample_params(seed, 5));
        for (a, b) in &pairs {
            prop_assert!(!degenerate_params(a, b));
        }
    }

    /// The reconstruction-coefficient identities hold at every
    /// non-degenerate small rational specialization.
    #[test]
    fn crt_relations_hold_generically(
        n in prop::sample::select(vec![3u64, 5, 7, 9]),
        a in small_rat(),
        b in small_rat(),
    ) {
        prop_assume!(!degenerate_params(&a, &b));
        prop_assert!(verify_crt_relations(n, &a, &b).unwrap());
    }
}
