//! Finite and truncated-infinite q-Pochhammer symbols.

use exact_poly::{BigRational, QPoly, QRat};
use num::traits::{One, Zero};

use crate::series::FormalSeries;
use crate::{QSeriesError, QSeriesResult};

/// The argument of a Pochhammer symbol: a scaled power `c · q^e` of the
/// series variable, with `e` possibly negative (e.g. `1/q`, `3/q`).
///
/// The zero argument is canonicalized to `coeff = 0, exp = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PochArg {
    coeff: BigRational,
    exp: i64,
}

impl PochArg {
    pub fn new(coeff: BigRational, exp: i64) -> Self {
        if coeff.is_zero() {
            PochArg {
                coeff,
                exp: 0,
            }
        } else {
            PochArg { coeff, exp }
        }
    }

    /// `q^e` (coefficient 1).
    pub fn q_power(exp: i64) -> Self {
        PochArg::new(BigRational::one(), exp)
    }

    /// A plain constant `c` (exponent 0).
    pub fn constant(coeff: BigRational) -> Self {
        PochArg::new(coeff, 0)
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    pub fn exp(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// The argument multiplied by `q^delta` (used by the splitting law
    /// `(x; q^s)_{k1+k2} = (x; q^s)_{k1} · (x·q^{s·k1}; q^s)_{k2}`).
    pub fn shifted(&self, delta: i64) -> Self {
        if self.is_zero() {
            self.clone()
        } else {
            PochArg::new(self.coeff.clone(), self.exp + delta)
        }
    }
}

/// Finite q-Pochhammer symbol `(x; q^step)_k = ∏_{j=0}^{k-1} (1 - c·q^{e + step·j})`
/// as an exact rational function (negative `e` produces genuine denominators).
pub fn qpoch(x: &PochArg, step: u64, k: u64) -> QRat {
    if x.is_zero() || k == 0 {
        return QRat::one();
    }
    let mut num = QPoly::one();
    let mut den_pow: u64 = 0;
    for j in 0..k {
        let m = x.exp + (step * j) as i64;
        if m >= 0 {
            num = num.mul_binomial(&x.coeff, m as usize);
        } else {
            // 1 - c·q^{-|m|} = (q^{|m|} - c) / q^{|m|}
            let mm = (-m) as usize;
            let mut binom = QPoly::monomial(BigRational::one(), mm);
            binom = binom.sub(&QPoly::constant(x.coeff.clone()));
            num = num.mul(&binom);
            den_pow += mm as u64;
        }
    }
    let den = QPoly::monomial(BigRational::one(), den_pow as usize);
    QRat::new(num, den).expect("q^m is nonzero")
}

/// Truncation of the infinite product `(x; q^step)_∞ = ∏_{j≥0} (1 - c·q^{e + step·j})`
/// to a series of order `n`. Factors with `e + step·j > n` are 1 at this
/// order and are skipped, so the computation is finite. Negative `e` is an
/// error (the product is not a formal power series); the zero argument
/// gives the constant series 1.
pub fn qpoch_inf(x: &PochArg, step: u64, n: usize) -> QSeriesResult<FormalSeries> {
    if x.is_zero() {
        return Ok(FormalSeries::one(n));
    }
    if x.exp < 0 {
        return Err(QSeriesError::NegativeExponent(x.exp));
    }
    let mut s = FormalSeries::one(n);
    let mut m = x.exp as u64;
    while m <= n as u64 {
        s.mul_binomial(&x.coeff, m as usize);
        m += step;
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::series_of_rat;
    use exact_poly::BigInt;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn finite_pochhammer_small_cases() {
        // (q; q^2)_2 = (1 - q)(1 - q^3).
        let p = qpoch(&PochArg::q_power(1), 2, 2);
        assert!(p.is_polynomial());
        assert_eq!(p.num(), &QPoly::from_ints(&[1, -1, 0, -1, 1]));
        // Empty product.
        assert_eq!(qpoch(&PochArg::q_power(1), 2, 0), QRat::one());
        // Zero argument.
        assert_eq!(qpoch(&PochArg::constant(r(0, 1)), 3, 5), QRat::one());
    }

    #[test]
    fn negative_exponent_yields_rational_function() {
        // (3·q^{-1}; q^4)_1 = 1 - 3/q = (q - 3)/q.
        let p = qpoch(&PochArg::new(r(3, 1), -1), 4, 1);
        assert_eq!(p.num(), &QPoly::from_ints(&[-3, 1]));
        assert_eq!(p.den(), &QPoly::from_ints(&[0, 1]));
    }

    #[test]
    fn infinite_product_truncation() {
        // (q; q)_inf at N = 3: (1-q)(1-q^2)(1-q^3) truncated = 1 - q - q^2 + 0·q^3.
        let s = qpoch_inf(&PochArg::q_power(1), 1, 3).unwrap();
        assert_eq!(
            s.coeffs(),
            &[r(1, 1), r(-1, 1), r(-1, 1), r(0, 1)]
        );
        // Euler: through order 7 the pentagonal-number pattern appears.
        let s7 = qpoch_inf(&PochArg::q_power(1), 1, 7).unwrap();
        assert_eq!(
            s7.coeffs(),
            &[
                r(1, 1),
                r(-1, 1),
                r(-1, 1),
                r(0, 1),
                r(0, 1),
                r(1, 1),
                r(0, 1),
                r(1, 1)
            ]
        );
    }

    #[test]
    fn infinite_product_edge_cases() {
        // Zero argument: constant 1.
        let z = qpoch_inf(&PochArg::constant(r(0, 1)), 2, 5).unwrap();
        assert_eq!(z, FormalSeries::one(5));
        // e = 0 contributes the constant (1 - c).
        let s = qpoch_inf(&PochArg::constant(r(3, 1)), 7, 5).unwrap();
        assert_eq!(s.coeff(0), &r(-2, 1));
        // Negative exponent refused.
        assert_eq!(
            qpoch_inf(&PochArg::new(r(1, 1), -2), 2, 5),
            Err(QSeriesError::NegativeExponent(-2))
        );
    }

    #[test]
    fn finite_product_consistency_with_infinite_quotient() {
        // (x; q^s)_k = (x; q^s)_inf / (x·q^{s·k}; q^s)_inf through order 20.
        let n = 20;
        for (c, e, s, k) in [
            (r(1, 1), 1, 2u64, 3u64),
            (r(2, 3), 2, 1, 4),
            (r(-5, 2), 0, 3, 2),
        ] {
            let x = PochArg::new(c, e);
            let finite = series_of_rat(&qpoch(&x, s, k), n).unwrap();
            let full = qpoch_inf(&x, s, n).unwrap();
            let shifted = qpoch_inf(&x.shifted((s * k) as i64), s, n).unwrap();
            assert_eq!(finite, full.div(&shifted).unwrap());
        }
    }
}
