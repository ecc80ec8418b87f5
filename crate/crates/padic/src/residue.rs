//! p-adic valuations of rationals and residues modulo prime powers.

use crate::{check_precision, check_prime, PadicError, PadicResult};
use num::traits::{One, ToPrimitive, Zero};
use num::{BigInt, BigRational, BigUint, Integer};
use std::fmt;

/// The p-adic valuation of a rational number, with a sentinel for zero
/// (which vanishes to infinite order).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PadicValuation {
    /// `v_p(num) − v_p(den)`; negative at a pole.
    Finite(i64),
    /// The valuation of zero.
    PlusInfinity,
}

impl PadicValuation {
    /// Whether the valuation is at least `bound` (the sentinel always is).
    pub fn at_least(&self, bound: i64) -> bool {
        match self {
            PadicValuation::PlusInfinity => true,
            PadicValuation::Finite(v) => *v >= bound,
        }
    }
}

impl fmt::Display for PadicValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PadicValuation::Finite(v) => write!(f, "{v}"),
            PadicValuation::PlusInfinity => write!(f, "+inf"),
        }
    }
}

/// `v_p(x)` for a rational `x` and a prime `p`.
///
/// The input is in lowest terms, so at most one of the numerator and
/// denominator carries a power of `p`.
pub fn vp(x: &BigRational, p: u64) -> PadicValuation {
    if x.is_zero() {
        return PadicValuation::PlusInfinity;
    }
    let p = BigInt::from(p);
    let mut v = 0i64;
    let mut n = x.numer().clone();
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    let mut d = x.denom().clone();
    while (&d % &p).is_zero() {
        d /= &p;
        v -= 1;
    }
    PadicValuation::Finite(v)
}

/// A residue `value ∈ [0, p^e)` at precision `e` digits base the odd
/// prime `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicResidue {
    p: u64,
    e: u32,
    value: BigUint,
}

impl PadicResidue {
    /// Reduce `value` modulo `p^e`.
    pub fn new(p: u64, e: u32, value: BigUint) -> PadicResult<Self> {
        check_prime(p)?;
        check_precision(e)?;
        let m = BigUint::from(p).pow(e);
        Ok(PadicResidue {
            p,
            e,
            value: value % m,
        })
    }

    /// The zero residue at precision `e`.
    pub fn zero(p: u64, e: u32) -> PadicResult<Self> {
        PadicResidue::new(p, e, BigUint::zero())
    }

    /// The prime base.
    pub fn p(&self) -> u64 {
        self.p
    }

    /// The precision (number of base-`p` digits).
    pub fn e(&self) -> u32 {
        self.e
    }

    /// The reduced value in `[0, p^e)`.
    pub fn value(&self) -> &BigUint {
        &self.value
    }

    /// The value as `u64` when it fits (it does for every claim checked
    /// by this tool).
    pub fn value_u64(&self) -> Option<u64> {
        self.value.to_u64()
    }

    /// `p^e`.
    pub fn modulus(&self) -> BigUint {
        BigUint::from(self.p).pow(self.e)
    }

    /// Drop precision to `e2 ≤ e` digits.
    pub fn truncate(&self, e2: u32) -> PadicResult<Self> {
        check_precision(e2)?;
        assert!(e2 <= self.e, "cannot gain precision by truncation");
        PadicResidue::new(self.p, e2, self.value.clone())
    }

    /// The value lifted to a rational number, for valuation diagnostics.
    pub fn to_rational(&self) -> BigRational {
        BigRational::from(BigInt::from(self.value.clone()))
    }
}

impl fmt::Display for PadicResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {}^{})", self.value, self.p, self.e)
    }
}

/// Inverse of `x` modulo `m`, when coprime.
pub(crate) fn modinv(x: &BigInt, m: &BigInt) -> Option<BigInt> {
    let g = x.extended_gcd(m);
    if !g.gcd.is_one() {
        return None;
    }
    Some(g.x.mod_floor(m))
}

/// Reduce a `p`-integral rational modulo `p^e` via a modular inverse of
/// its denominator.
pub fn rat_mod(x: &BigRational, p: u64, e: u32) -> PadicResult<PadicResidue> {
    check_prime(p)?;
    check_precision(e)?;
    if (x.denom() % BigInt::from(p)).is_zero() {
        return Err(PadicError::NotPIntegral(x.to_string(), p));
    }
    let m = BigInt::from(p).pow(e);
    let dinv = modinv(&x.denom().mod_floor(&m), &m)
        .expect("denominator coprime to p is coprime to p^e");
    let value = (x.numer().mod_floor(&m) * dinv).mod_floor(&m);
    PadicResidue::new(p, e, value.to_biguint().expect("mod_floor is nonnegative"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn valuation_splits_between_numerator_and_denominator() {
        assert_eq!(vp(&rat(9, 4), 3), PadicValuation::Finite(2));
        assert_eq!(vp(&rat(9, 4), 2), PadicValuation::Finite(-2));
        assert_eq!(vp(&rat(1, 3), 3), PadicValuation::Finite(-1));
        assert_eq!(vp(&rat(278235, 262144), 3), PadicValuation::Finite(5));
        assert_eq!(vp(&rat(7, 5), 3), PadicValuation::Finite(0));
    }

    #[test]
    fn valuation_of_zero_is_the_sentinel() {
        assert_eq!(vp(&rat(0, 1), 7), PadicValuation::PlusInfinity);
        assert!(vp(&rat(0, 1), 7).at_least(1_000_000));
    }

    #[test]
    fn residue_reduction_uses_modular_inverse() {
        assert_eq!(rat_mod(&rat(1, 2), 5, 2).unwrap().value_u64(), Some(13));
        assert_eq!(rat_mod(&rat(0, 1), 7, 3).unwrap().value_u64(), Some(0));
        assert_eq!(rat_mod(&rat(-1, 1), 5, 1).unwrap().value_u64(), Some(4));
        assert_eq!(rat_mod(&rat(10, 3), 5, 2).unwrap().value_u64(), Some(20));
    }

    #[test]
    fn non_integral_input_is_an_error() {
        assert!(matches!(
            rat_mod(&rat(7, 3), 3, 1),
            Err(PadicError::NotPIntegral(_, 3))
        ));
        assert!(matches!(
            rat_mod(&rat(1, 2), 4, 1),
            Err(PadicError::BadPrime(4))
        ));
        assert!(matches!(
            rat_mod(&rat(1, 2), 5, 0),
            Err(PadicError::ZeroPrecision)
        ));
    }

    #[test]
    fn truncation_drops_digits() {
        let r = rat_mod(&rat(1, 2), 5, 3).unwrap();
        assert_eq!(r.value_u64(), Some(63));
        assert_eq!(r.truncate(2).unwrap().value_u64(), Some(13));
        assert_eq!(r.truncate(1).unwrap().value_u64(), Some(3));
    }

    #[test]
    fn display_shows_value_and_modulus() {
        let r = PadicResidue::new(5, 2, BigUint::from(38u32)).unwrap();
        assert_eq!(r.to_string(), "13 (mod 5^2)");
    }
}
