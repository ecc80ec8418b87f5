//! Property tests for the polynomial and rational-function layer.

use exact_poly::{
    cyclotomic, eval_rat, poly_divrem, poly_gcd, q_integer, valuation_at, BigInt, BigRational,
    QPoly, QRat, Valuation,
};
use num::traits::{One, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=9)
        .prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn poly(max_len: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(rational(), 0..=max_len).prop_map(QPoly::from_coeffs)
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = QPoly> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn divrem_round_trips(a in poly(8), b in nonzero_poly(5)) {
        let (q, r) = poly_divrem(&a, &b).unwrap();
        prop_assert_eq!(q.mul(&b).add(&r), a);
        if let Some(dr) = r.degree() {
            prop_assert!(dr < b.degree().unwrap());
        }
    }

    #[test]
    fn gcd_divides_both_operands(a in nonzero_poly(6), b in nonzero_poly(6)) {
        let g = poly_gcd(&a, &b).unwrap();
        prop_assert!(a.exact_div(&g).is_some());
        prop_assert!(b.exact_div(&g).is_some());
        prop_assert!(g.leading().unwrap().is_one());
    }

    #[test]
    fn gcd_scales_with_common_factor(a in nonzero_poly(4), b in nonzero_poly(4), c in nonzero_poly(3)) {
        let g = poly_gcd(&a, &b).unwrap();
        let gc = poly_gcd(&a.mul(&c), &b.mul(&c)).unwrap();
        prop_assert_eq!(gc, g.mul(&c).monic());
    }

    #[test]
    fn rational_ops_invert(a in poly(5), b in poly(5), d1 in nonzero_poly(3), d2 in nonzero_poly(3)) {
        let x = QRat::new(a, d1).unwrap();
        let y = QRat::new(b, d2).unwrap();
        prop_assert_eq!(x.add(&y).sub(&y), x.clone());
        if !y.is_zero() {
            prop_assert_eq!(x.mul(&y).div(&y).unwrap(), x);
        }
    }

    #[test]
    fn rationals_stay_canonical(a in poly(5), d in nonzero_poly(4)) {
        let x = QRat::new(a, d).unwrap();
        prop_assert!(x.den().leading().unwrap().is_one());
        if !x.is_zero() {
            prop_assert!(poly_gcd(x.num(), x.den()).unwrap().is_one());
        } else {
            prop_assert!(x.den().is_one());
        }
        // Re-normalizing a canonical value is the identity.
        let again = QRat::new(x.num().clone(), x.den().clone()).unwrap();
        prop_assert_eq!(again, x);
    }

    #[test]
    fn valuation_is_additive_at_irreducibles(
        a in nonzero_poly(5),
        b in nonzero_poly(4),
        d in nonzero_poly(3),
        which in 0usize..3,
    ) {
        // Additivity v(fg) = v(f) + v(g) holds at irreducible moduli.
        let m = match which {
            0 => QPoly::from_ints(&[1, 1]),      // q + 1
            1 => QPoly::from_ints(&[1, 1, 1]),   // q^2 + q + 1
            _ => QPoly::from_ints(&[1, 0, 1]),   // q^2 + 1
        };
        let f = QRat::new(a, d.clone()).unwrap();
        let g = QRat::new(b, d).unwrap();
        let (Valuation::Finite(vf), Valuation::Finite(vg)) =
            (valuation_at(&f, &m).unwrap(), valuation_at(&g, &m).unwrap())
        else {
            return Err(TestCaseError::fail("nonzero inputs have finite valuation"));
        };
        let Valuation::Finite(vfg) = valuation_at(&f.mul(&g), &m).unwrap() else {
            return Err(TestCaseError::fail("nonzero product has finite valuation"));
        };
        prop_assert_eq!(vfg, vf + vg);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in poly(5), b in poly(5), x in rational()) {
        let fa = QRat::from_poly(a.clone());
        let fb = QRat::from_poly(b.clone());
        let va = eval_rat(&fa, &x).unwrap();
        let vb = eval_rat(&fb, &x).unwrap();
        prop_assert_eq!(eval_rat(&fa.add(&fb), &x).unwrap(), &va + &vb);
        prop_assert_eq!(eval_rat(&fa.mul(&fb), &x).unwrap(), &va * &vb);
    }

    #[test]
    fn q_integer_is_cyclotomic_product(r in 1u64..=50) {
        // [r] = prod over divisors d > 1 of r of Phi_d(q).
        let mut prod = QPoly::one();
        for d in 2..=r {
            if r % d == 0 {
                prod = prod.mul(&cyclotomic(d).unwrap());
            }
        }
        prop_assert_eq!(q_integer(r), prod);
    }

    #[test]
    fn eval_at_one_matches_limit_of_q_integer_ratio(n in 1u64..=12, m in 1u64..=12) {
        // [nm]/[m] has a removable singularity filled in at q = 1 with value n.
        let f = QRat::new(q_integer(n * m), q_integer(m)).unwrap();
        let v = eval_rat(&f, &BigRational::one()).unwrap();
        prop_assert_eq!(v, BigRational::from_integer(BigInt::from(n)));
    }

    #[test]
    fn zero_polynomial_behaves(a in poly(5)) {
        let z = QPoly::zero();
        prop_assert_eq!(a.add(&z), a.clone());
        prop_assert_eq!(a.mul(&z), QPoly::zero());
        prop_assert!(a.sub(&a).is_zero());
        let _ = BigRational::zero(); // keep the Zero import exercised
    }
}
