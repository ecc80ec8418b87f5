//! The five truncated sum families whose congruence behaviour the suite
//! verifies, plus deliberately perturbed variants used by the mutation
//! harness to prove the checker can fail.

use exact_poly::{BigRational, QRat};
use num::traits::{One, Zero};

use crate::engine::{evaluate, Factor, SumSpec};
use crate::{QSeriesError, QSeriesResult};

fn one() -> BigRational {
    BigRational::one()
}

fn check_odd(n: u64) -> QSeriesResult<()> {
    if n == 0 || n % 2 == 0 {
        return Err(QSeriesError::BadOddN(n));
    }
    Ok(())
}

fn check_truncation(n: u64, m: u64) -> QSeriesResult<()> {
    check_odd(n)?;
    let half = (n - 1) / 2;
    let full = n - 1;
    if m != half && m != full {
        return Err(QSeriesError::BadTruncation { half, full, got: m });
    }
    Ok(())
}

fn check_nonzero(x: &BigRational, name: &'static str) -> QSeriesResult<()> {
    if x.is_zero() {
        return Err(QSeriesError::ZeroParameter(name));
    }
    Ok(())
}

/// `Σ_{k=0}^{M} [6k+w] (q;q²)_k³ (q;q⁴)_k / ((q²;q²)_k (q⁴;q⁴)_k³) q^{k²+k}`
/// with weight offset `w` (the standard sum uses `w = 1`).
pub fn sum_a_weighted(n: u64, m: u64, weight_offset: u64) -> QSeriesResult<QRat> {
    check_truncation(n, m)?;
    let spec = SumSpec {
        weight_stride: 6,
        weight_offset,
        numerator: vec![
            Factor::new(one(), 1, 2),
            Factor::new(one(), 1, 2),
            Factor::new(one(), 1, 2),
            Factor::new(one(), 1, 4),
        ],
        denominator: vec![
            Factor::new(one(), 2, 2),
            Factor::new(one(), 4, 4),
            Factor::new(one(), 4, 4),
            Factor::new(one(), 4, 4),
        ],
        quad: 1,
        lin: 1,
        scalar: one(),
    };
    Ok(evaluate(&spec, m))
}

/// The first sum family: weight `[6k+1]`, truncation `M ∈ {(n-1)/2, n-1}`.
pub fn sum_a(n: u64, m: u64) -> QSeriesResult<QRat> {
    sum_a_weighted(n, m, 1)
}

/// `Σ_{k=0}^{M} [6k+1] (q;q²)_k² (q²;q⁴)_k (q;q⁴)_k² / ((q²;q²)_k² (q⁴;q⁴)_k³) q^{e·k}`
/// with linear exponent `e` (the standard sum uses `e = 2`).
pub fn sum_b_exponent(n: u64, m: u64, lin: u64) -> QSeriesResult<QRat> {
    check_truncation(n, m)?;
    let spec = SumSpec {
        weight_stride: 6,
        weight_offset: 1,
        numerator: vec![
            Factor::new(one(), 1, 2),
            Factor::new(one(), 1, 2),
            Factor::new(one(), 2, 4),
            Factor::new(one(), 1, 4),
            Factor::new(one(), 1, 4),
        ],
        denominator: vec![
            Factor::new(one(), 2, 2),
            Factor::new(one(), 2, 2),
            Factor::new(one(), 4, 4),
            Factor::new(one(), 4, 4),
            Factor::new(one(), 4, 4),
        ],
        quad: 0,
        lin,
        scalar: one(),
    };
    Ok(evaluate(&spec, m))
}

/// The second sum family: weight `[6k+1]`, exponent `q^{2k}`.
pub fn sum_b(n: u64, m: u64) -> QSeriesResult<QRat> {
    sum_b_exponent(n, m, 2)
}

/// `Σ_{k=0}^{M} (-1)^k [4k+w] (q;q²)_k⁴ (q²;q⁴)_k / ((q²;q²)_k⁴ (q⁴;q⁴)_k) q^k`
/// with weight offset `w` (the standard sum uses `w = 1`).
pub fn sum_c_weighted(n: u64, m: u64, weight_offset: u64) -> QSeriesResult<QRat> {
    check_truncation(n, m)?;
    let spec = SumSpec {
        weight_stride: 4,
        weight_offset,
        numerator: vec![
            Factor::new(one(), 1, 2),
            Factor::new(one(), 1, 2),
            Factor::new(one(), 1, 2),
            Factor::new(one(), 1, 2),
            Factor::new(one(), 2, 4),
        ],
        denominator: vec![
            Factor::new(one(), 2, 2),
            Factor::new(one(), 2, 2),
            Factor::new(one(), 2, 2),
            Factor::new(one(), 2, 2),
            Factor::new(one(), 4, 4),
        ],
        quad: 0,
        lin: 1,
        scalar: -one(),
    };
    Ok(evaluate(&spec, m))
}

/// The alternating sum family: weight `(-1)^k [4k+1]`, exponent `q^k`.
pub fn sum_c(n: u64, m: u64) -> QSeriesResult<QRat> {
    sum_c_weighted(n, m, 1)
}

/// Two-parameter generalization of [`sum_a`]:
///
/// `Σ_{k=0}^{M} [6k+w] (q,aq,q/a;q²)_k (q/b;q⁴)_k /
///  ((q⁴,q⁴/a,aq⁴;q⁴)_k (bq²;q²)_k) · q^{k²+k} b^k`.
///
/// Specializing `a = b = 1` recovers [`sum_a`] exactly. `M` is
/// unrestricted; `a` and `b` must be nonzero.
pub fn sum_lemma1_weighted(
    n: u64,
    m: u64,
    a: &BigRational,
    b: &BigRational,
    weight_offset: u64,
) -> QSeriesResult<QRat> {
    check_odd(n)?;
    check_nonzero(a, "a")?;
    check_nonzero(b, "b")?;
    let a_inv = a.recip();
    let spec = SumSpec {
        weight_stride: 6,
        weight_offset,
        numerator: vec![
            Factor::new(one(), 1, 2),
            Factor::new(a.clone(), 1, 2),
            Factor::new(a_inv.clone(), 1, 2),
            Factor::new(b.recip(), 1, 4),
        ],
        denominator: vec![
            Factor::new(one(), 4, 4),
            Factor::new(a_inv, 4, 4),
            Factor::new(a.clone(), 4, 4),
            Factor::new(b.clone(), 2, 2),
        ],
        quad: 1,
        lin: 1,
        scalar: b.clone(),
    };
    Ok(evaluate(&spec, m))
}

pub fn sum_lemma1(n: u64, m: u64, a: &BigRational, b: &BigRational) -> QSeriesResult<QRat> {
    sum_lemma1_weighted(n, m, a, b, 1)
}

/// Two-parameter generalization of [`sum_b`]:
///
/// `Σ_{k=0}^{M} [6k+w] (aq,q/a;q²)_k (q²,bq,q/b;q⁴)_k /
///  ((q⁴,q⁴/a,aq⁴;q⁴)_k (q²/b,bq²;q²)_k) · q^{2k}`.
///
/// Specializing `a = b = 1` recovers [`sum_b`] exactly.
pub fn sum_lemma2_weighted(
    n: u64,
    m: u64,
    a: &BigRational,
    b: &BigRational,
    weight_offset: u64,
) -> QSeriesResult<QRat> {
    check_odd(n)?;
    check_nonzero(a, "a")?;
    check_nonzero(b, "b")?;
    let a_inv = a.recip();
    let b_inv = b.recip();
    let spec = SumSpec {
        weight_stride: 6,
        weight_offset,
        numerator: vec![
            Factor::new(a.clone(), 1, 2),
            Factor::new(a_inv.clone(), 1, 2),
            Factor::new(one(), 2, 4),
            Factor::new(b.clone(), 1, 4),
            Factor::new(b_inv.clone(), 1, 4),
        ],
        denominator: vec![
            Factor::new(one(), 4, 4),
            Factor::new(a_inv, 4, 4),
            Factor::new(a.clone(), 4, 4),
            Factor::new(b_inv, 2, 2),
            Factor::new(b.clone(), 2, 2),
        ],
        quad: 0,
        lin: 2,
        scalar: one(),
    };
    Ok(evaluate(&spec, m))
}

pub fn sum_lemma2(n: u64, m: u64, a: &BigRational, b: &BigRational) -> QSeriesResult<QRat> {
    sum_lemma2_weighted(n, m, a, b, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_poly::{eval_rat, BigInt};

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn big(s: &str) -> BigRational {
        let mut parts = s.splitn(2, '/');
        let n: BigInt = parts.next().unwrap().parse().unwrap();
        let d: BigInt = parts.next().unwrap_or("1").parse().unwrap();
        BigRational::new(n, d)
    }

    #[test]
    fn trivial_single_term_sums() {
        assert!(sum_a(1, 0).unwrap().is_one());
        assert!(sum_b(1, 0).unwrap().is_one());
        assert!(sum_c(1, 0).unwrap().is_one());
        assert!(sum_lemma1(1, 0, &r(2, 1), &r(3, 1)).unwrap().is_one());
        assert!(sum_lemma2(1, 0, &r(2, 1), &r(3, 1)).unwrap().is_one());
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        assert_eq!(
            sum_a(3, 3),
            Err(QSeriesError::BadTruncation {
                half: 1,
                full: 2,
                got: 3
            })
        );
        assert_eq!(sum_a(4, 2), Err(QSeriesError::BadOddN(4)));
        assert_eq!(
            sum_lemma1(3, 2, &r(0, 1), &r(3, 1)),
            Err(QSeriesError::ZeroParameter("a"))
        );
        assert_eq!(
            sum_lemma2(3, 2, &r(2, 1), &r(0, 1)),
            Err(QSeriesError::ZeroParameter("b"))
        );
    }

    #[test]
    fn first_family_frozen_values() {
        let s = sum_a(3, 2).unwrap();
        assert_eq!(s.num().degree(), Some(34));
        assert_eq!(s.den().degree(), Some(34));
        assert_eq!(
            eval_rat(&s, &r(2, 1)).unwrap(),
            big("2650220479417/2518296328125")
        );
        assert_eq!(
            eval_rat(&s, &r(-1, 3)).unwrap(),
            big("1851883129221727/1411502080000000")
        );
        assert_eq!(eval_rat(&s, &r(1, 1)).unwrap(), big("278235/262144"));
    }

    #[test]
    fn second_family_frozen_values() {
        let s = sum_b(3, 2).unwrap();
        assert_eq!(s.num().degree(), Some(36));
        assert_eq!(s.den().degree(), Some(36));
        assert_eq!(
            eval_rat(&s, &r(2, 1)).unwrap(),
            big("4450943081263/4197160546875")
        );
        assert_eq!(
            eval_rat(&s, &r(-1, 3)).unwrap(),
            big("18993708025123279/14115020800000000")
        );
        assert_eq!(eval_rat(&s, &r(1, 1)).unwrap(), big("561735/524288"));
    }

    #[test]
    fn alternating_family_frozen_values() {
        let s = sum_c(5, 4).unwrap();
        assert_eq!(s.num().degree(), Some(84));
        assert_eq!(s.den().degree(), Some(84));
        assert_eq!(
            eval_rat(&s, &r(2, 1)).unwrap(),
            big("61231707910456829809458410771/68649147798759659577392578125")
        );
        assert_eq!(eval_rat(&s, &r(1, 1)).unwrap(), big("30845936835/34359738368"));
    }

    #[test]
    fn two_parameter_sums_frozen_values() {
        let s1 = sum_lemma1(3, 2, &r(2, 1), &r(3, 1)).unwrap();
        assert_eq!(
            eval_rat(&s1, &r(5, 1)).unwrap(),
            big("285231574336199302925556971/284396355054397736139924896")
        );
        let s2 = sum_lemma2(3, 2, &r(2, 1), &r(3, 1)).unwrap();
        assert_eq!(
            eval_rat(&s2, &r(5, 1)).unwrap(),
            big("22369390721140218998220015889/22111816605479423984879160664")
        );
    }

    #[test]
    fn specialization_at_one_one_recovers_single_parameter_sums() {
        let one_ = r(1, 1);
        for n in [3u64, 5, 7, 9] {
            for m in [(n - 1) / 2, n - 1] {
                assert_eq!(
                    sum_lemma1(n, m, &one_, &one_).unwrap(),
                    sum_a(n, m).unwrap(),
                    "first family mismatch at n={n}, M={m}"
                );
                assert_eq!(
                    sum_lemma2(n, m, &one_, &one_).unwrap(),
                    sum_b(n, m).unwrap(),
                    "second family mismatch at n={n}, M={m}"
                );
            }
        }
    }

    #[test]
    fn weighted_variants_differ_from_standard() {
        assert_ne!(sum_a(3, 2).unwrap(), sum_a_weighted(3, 2, 2).unwrap());
        assert_ne!(sum_b(3, 2).unwrap(), sum_b_exponent(3, 2, 3).unwrap());
        assert_ne!(sum_c(3, 2).unwrap(), sum_c_weighted(3, 2, 3).unwrap());
    }
}
