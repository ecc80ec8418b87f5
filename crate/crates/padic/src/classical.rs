//! Exact rising factorials, second-order harmonic numbers, and the three
//! truncated hypergeometric sums at `q = 1`.

use num::traits::{One, Zero};
use num::{BigInt, BigRational};
use std::fmt;

/// The exact rising factorial `(x)_k = x(x+1)…(x+k−1)`, with `(x)_0 = 1`.
pub fn pochhammer(x: &BigRational, k: u64) -> BigRational {
    let mut out = BigRational::one();
    let mut factor = x.clone();
    for _ in 0..k {
        out *= &factor;
        factor += BigRational::one();
    }
    out
}

/// The harmonic number of order 2, `H_m = Σ_{k=1}^m 1/k²`, with `H_0 = 0`.
pub fn harmonic2(m: u64) -> BigRational {
    let mut out = BigRational::zero();
    for k in 1..=m {
        let k = BigInt::from(k);
        out += BigRational::new(BigInt::one(), &k * &k);
    }
    out
}

/// The three summand families, named by their hypergeometric payload:
/// `A2`: `(−1)^k (4k+1) (1/2)_k^5 / k!^5`;
/// `F1`: `(6k+1) (1/2)_k^3 (1/4)_k / (k!^4 4^k)`;
/// `F2`: `(6k+1) (1/2)_k^3 (1/4)_k^2 / k!^5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassicalFamily {
    A2,
    F1,
    F2,
}

impl ClassicalFamily {
    /// Identifier used in diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            ClassicalFamily::A2 => "A2",
            ClassicalFamily::F1 => "F1",
            ClassicalFamily::F2 => "F2",
        }
    }
}

impl fmt::Display for ClassicalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// An exact truncated sum `Σ_{k=0}^{upper}` of one family.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassicalSum {
    /// Which summand family was summed.
    pub family: ClassicalFamily,
    /// Inclusive upper summation limit.
    pub upper: u64,
    /// The exact rational value of the partial sum.
    pub value: BigRational,
}

/// Truncated sum with the linear weight shifted to `4k + weight_offset`
/// (family `A2`) or `6k + weight_offset` (families `F1`, `F2`).  The
/// published sums use `weight_offset = 1`; other offsets exist to prove
/// the checker detects single-token summand mutations.
pub fn sum_classical_weighted(
    family: ClassicalFamily,
    upper: u64,
    weight_offset: u64,
) -> ClassicalSum {
    let one = BigRational::one();
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let quarter = BigRational::new(BigInt::from(1), BigInt::from(4));
    let four = BigRational::from(BigInt::from(4));

    // Running values of (1/2)_k, (1/4)_k, k!, 4^k and (−1)^k.
    let mut half_k = BigRational::one();
    let mut quarter_k = BigRational::one();
    let mut fact_k = BigRational::one();
    let mut four_k = BigRational::one();
    let mut negate = false;

    let mut value = BigRational::zero();
    for k in 0..=upper {
        let stride = if family == ClassicalFamily::A2 { 4 } else { 6 };
        let weight = BigRational::from(BigInt::from(stride * k + weight_offset));
        let term = match family {
            ClassicalFamily::A2 => {
                let t = &weight * half_k.pow(5) / fact_k.pow(5);
                if negate {
                    -t
                } else {
                    t
                }
            }
            ClassicalFamily::F1 => {
                &weight * half_k.pow(3) * &quarter_k / (fact_k.pow(4) * &four_k)
            }
            ClassicalFamily::F2 => &weight * half_k.pow(3) * quarter_k.pow(2) / fact_k.pow(5),
        };
        value += term;

        let kr = BigRational::from(BigInt::from(k));
        half_k *= &half + &kr;
        quarter_k *= &quarter + &kr;
        fact_k *= &kr + &one;
        four_k *= &four;
        negate = !negate;
    }
    ClassicalSum {
        family,
        upper,
        value,
    }
}

/// The exact truncated sum `Σ_{k=0}^{upper}` with the published weights.
pub fn sum_classical(family: ClassicalFamily, upper: u64) -> ClassicalSum {
    sum_classical_weighted(family, upper, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rising_factorial_small_cases() {
        assert_eq!(pochhammer(&rat(1, 2), 0), rat(1, 1));
        assert_eq!(pochhammer(&rat(1, 2), 2), rat(3, 4));
        assert_eq!(pochhammer(&rat(1, 4), 3), rat(45, 64));
        // (1)_k = k!.
        assert_eq!(pochhammer(&rat(1, 1), 5), rat(120, 1));
        assert_eq!(pochhammer(&rat(-3, 1), 4), rat(0, 1));
    }

    #[test]
    fn harmonic_numbers_of_order_two() {
        assert_eq!(harmonic2(0), rat(0, 1));
        assert_eq!(harmonic2(1), rat(1, 1));
        assert_eq!(harmonic2(3), rat(49, 36));
    }

    #[test]
    fn partial_sums_match_term_by_term_values() {
        assert_eq!(sum_classical(ClassicalFamily::F1, 0).value, rat(1, 1));
        assert_eq!(sum_classical(ClassicalFamily::A2, 0).value, rat(1, 1));
        assert_eq!(
            sum_classical(ClassicalFamily::F1, 2).value,
            rat(1, 1) + rat(7, 128) + rat(1755, 262144)
        );
        assert_eq!(
            sum_classical(ClassicalFamily::F1, 2).value,
            rat(278235, 262144)
        );
        assert_eq!(
            sum_classical(ClassicalFamily::F2, 2).value,
            rat(561735, 524288)
        );
        assert_eq!(
            sum_classical(ClassicalFamily::A2, 2).value,
            rat(29835, 32768)
        );
    }

    #[test]
    fn incremental_state_matches_direct_products() {
        for family in [
            ClassicalFamily::A2,
            ClassicalFamily::F1,
            ClassicalFamily::F2,
        ] {
            let direct: BigRational = (0..=6u64).map(|k| direct_term(family, k, 1)).sum();
            assert_eq!(sum_classical(family, 6).value, direct, "{family}");
        }
    }

    #[test]
    fn weight_offset_changes_the_sum() {
        let a = sum_classical_weighted(ClassicalFamily::A2, 2, 1);
        let b = sum_classical_weighted(ClassicalFamily::A2, 2, 3);
        assert_ne!(a.value, b.value);
        assert_eq!(a, sum_classical(ClassicalFamily::A2, 2));
    }

    fn direct_term(family: ClassicalFamily, k: u64, offset: u64) -> BigRational {
        let half = pochhammer(&rat(1, 2), k);
        let quarter = pochhammer(&rat(1, 4), k);
        let fact = pochhammer(&rat(1, 1), k);
        match family {
            ClassicalFamily::A2 => {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                rat(sign * (4 * k as i64 + offset as i64), 1) * half.pow(5) / fact.pow(5)
            }
            ClassicalFamily::F1 => {
                rat(6 * k as i64 + offset as i64, 1) * half.pow(3) * quarter
                    / (fact.pow(4) * rat(4, 1).pow(k as i32))
            }
            ClassicalFamily::F2 => {
                rat(6 * k as i64 + offset as i64, 1) * half.pow(3) * quarter.pow(2) / fact.pow(5)
            }
        }
    }
}
