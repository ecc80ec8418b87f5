//! Rational functions in `q`, kept fully reduced.

use std::fmt;

use num::traits::{One, Zero};
use num::BigRational;

use crate::gcd::poly_gcd;
use crate::poly::QPoly;
use crate::{PolyError, PolyResult};

/// A rational function `num / den` in canonical form:
///
/// * `den` is nonzero and monic,
/// * `gcd(num, den) = 1`,
/// * zero is represented as `0 / 1`.
///
/// Canonical form makes equality structural and keeps every later
/// congruence test a pure numerator computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QRat {
    num: QPoly,
    den: QPoly,
}

impl QRat {
    /// Build and reduce `num / den`. Errors when `den` is zero.
    pub fn new(num: QPoly, den: QPoly) -> PolyResult<Self> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(QRat {
                num: QPoly::zero(),
                den: QPoly::one(),
            });
        }
        let g = poly_gcd(&num, &den)?;
        let (mut n, mut d) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        let lc = d.leading().expect("den nonzero").clone();
        if !lc.is_one() {
            let inv = lc.recip();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        Ok(QRat { num: n, den: d })
    }

    pub fn zero() -> Self {
        QRat {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        QRat {
            num: QPoly::one(),
            den: QPoly::one(),
        }
    }

    pub fn from_poly(p: QPoly) -> Self {
        QRat {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn from_rational(c: BigRational) -> Self {
        QRat {
            num: QPoly::constant(c),
            den: QPoly::one(),
        }
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the reduced denominator is 1, i.e. the value is a polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, other: &QRat) -> Self {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        QRat::new(num, den).expect("denominator product is nonzero")
    }

    pub fn sub(&self, other: &QRat) -> Self {
        let num = self.num.mul(&other.den).sub(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        QRat::new(num, den).expect("denominator product is nonzero")
    }

    pub fn mul(&self, other: &QRat) -> Self {
        QRat::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("denominator product is nonzero")
    }

    pub fn div(&self, other: &QRat) -> PolyResult<Self> {
        if other.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        QRat::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn inv(&self) -> PolyResult<Self> {
        if self.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        QRat::new(self.den.clone(), self.num.clone())
    }

    pub fn neg(&self) -> Self {
        QRat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    /// Multiply by a plain polynomial.
    pub fn mul_poly(&self, p: &QPoly) -> Self {
        QRat::new(self.num.mul(p), self.den.clone()).expect("denominator unchanged")
    }

    /// Divide by a plain polynomial (error when `p` is zero).
    pub fn div_poly(&self, p: &QPoly) -> PolyResult<Self> {
        if p.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        QRat::new(self.num.clone(), self.den.mul(p))
    }

    /// Multiply by a rational scalar.
    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return QRat::zero();
        }
        QRat {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Binary operations exposed by [`rat_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact rational-function arithmetic; the result is always reduced.
/// Division by zero is the only error.
pub fn rat_arith(a: &QRat, b: &QRat, op: RatOp) -> PolyResult<QRat> {
    match op {
        RatOp::Add => Ok(a.add(b)),
        RatOp::Sub => Ok(a.sub(b)),
        RatOp::Mul => Ok(a.mul(b)),
        RatOp::Div => a.div(b),
    }
}

/// Order of vanishing of a rational function at an irreducible polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    /// The multiplicity of `m` in the numerator minus its multiplicity in
    /// the denominator (negative at a pole).
    Finite(i64),
    /// The zero function vanishes to infinite order everywhere.
    PlusInfinity,
}

fn multiplicity(f: &QPoly, m: &QPoly) -> i64 {
    let mut count = 0i64;
    let mut cur = f.clone();
    while let Some(next) = cur.exact_div(m) {
        count += 1;
        cur = next;
    }
    count
}

/// The `m`-adic valuation of `f`, where `m` must be a nonconstant
/// polynomial (callers pass irreducibles such as cyclotomics; for reducible
/// `m` the result is the multiplicity of `m` as a factor, which is still
/// well defined but not a valuation).
pub fn valuation_at(f: &QRat, m: &QPoly) -> PolyResult<Valuation> {
    if m.is_constant() {
        return Err(PolyError::ConstantModulus);
    }
    if f.is_zero() {
        return Ok(Valuation::PlusInfinity);
    }
    // f is reduced, so at most one of the two counts is nonzero.
    let up = multiplicity(f.num(), m);
    let down = multiplicity(f.den(), m);
    Ok(Valuation::Finite(up - down))
}

/// Evaluate `f` at the rational point `q0`.
///
/// At `q0 = 1` any shared powers of `(q - 1)` between numerator and
/// denominator are cancelled first (for a reduced [`QRat`] there are none,
/// but the cancellation keeps the function total on unreduced inputs).
/// A surviving zero denominator is reported as a pole.
pub fn eval_rat(f: &QRat, q0: &BigRational) -> PolyResult<BigRational> {
    let mut num = f.num().clone();
    let mut den = f.den().clone();
    if q0.is_one() {
        loop {
            let (Some(n2), Some(d2)) = (num.div_one_minus_q(), den.div_one_minus_q()) else {
                break;
            };
            num = n2;
            den = d2;
        }
    }
    let dv = den.eval(q0);
    if dv.is_zero() {
        return Err(PolyError::Pole(q0.to_string()));
    }
    Ok(num.eval(q0) / dv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q_integer;
    use num::BigInt;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn poly(v: &[i64]) -> QPoly {
        QPoly::from_ints(v)
    }

    #[test]
    fn construction_reduces_and_normalizes() {
        // (q^2 - 1) / (2q - 2) = (q + 1) / 2.
        let f = QRat::new(poly(&[-1, 0, 1]), poly(&[-2, 2])).unwrap();
        assert_eq!(f.num(), &QPoly::from_coeffs(vec![r(1, 2), r(1, 2)]));
        assert!(f.den().is_one());
        // Zero numerator resets the denominator to 1.
        let z = QRat::new(QPoly::zero(), poly(&[3, 1])).unwrap();
        assert_eq!(z, QRat::zero());
        // Zero denominator is rejected.
        assert_eq!(
            QRat::new(QPoly::one(), QPoly::zero()),
            Err(PolyError::DivisionByZero)
        );
    }

    #[test]
    fn denominator_is_monic_after_every_operation() {
        let a = QRat::new(poly(&[1]), poly(&[2, 4])).unwrap();
        assert!(a.den().leading().unwrap().is_one());
        let b = QRat::new(poly(&[0, 3]), poly(&[5, 0, 7])).unwrap();
        for f in [a.add(&b), a.sub(&b), a.mul(&b), a.div(&b).unwrap()] {
            assert!(f.den().leading().unwrap().is_one());
            assert!(poly_gcd(f.num(), f.den()).unwrap().is_one());
        }
    }

    #[test]
    fn rat_arith_field_identities() {
        let a = QRat::new(poly(&[1, 1]), poly(&[-1, 1])).unwrap();
        let b = QRat::new(poly(&[0, 0, 1]), poly(&[1, 1, 1])).unwrap();
        let sum = rat_arith(&a, &b, RatOp::Add).unwrap();
        assert_eq!(rat_arith(&sum, &b, RatOp::Sub).unwrap(), a);
        let prod = rat_arith(&a, &b, RatOp::Mul).unwrap();
        assert_eq!(rat_arith(&prod, &b, RatOp::Div).unwrap(), a);
        assert_eq!(
            rat_arith(&a, &QRat::zero(), RatOp::Div),
            Err(PolyError::DivisionByZero)
        );
    }

    #[test]
    fn valuation_at_q_integer_factors() {
        // f = (q^2 + q + 1)^2 / (q + 1): valuation 2 at Phi_3, -1 at Phi_2.
        let phi3 = poly(&[1, 1, 1]);
        let phi2 = poly(&[1, 1]);
        let f = QRat::new(phi3.pow(2), phi2.clone()).unwrap();
        assert_eq!(valuation_at(&f, &phi3).unwrap(), Valuation::Finite(2));
        assert_eq!(valuation_at(&f, &phi2).unwrap(), Valuation::Finite(-1));
        assert_eq!(valuation_at(&f, &poly(&[1, -1, 1])).unwrap(), Valuation::Finite(0));
        assert_eq!(
            valuation_at(&QRat::zero(), &phi3).unwrap(),
            Valuation::PlusInfinity
        );
        assert_eq!(
            valuation_at(&f, &QPoly::one()),
            Err(PolyError::ConstantModulus)
        );
    }

    #[test]
    fn eval_rat_cancels_removable_singularity_at_one() {
        // [6]/[2] reduces to q^4 + q^2 + 1; at q = 1 the value is 3.
        let f = QRat::new(q_integer(6), q_integer(2)).unwrap();
        assert_eq!(eval_rat(&f, &r(1, 1)).unwrap(), r(3, 1));
        // Same value via the unreduced route: (1 - q^6)/(1 - q^2).
        let g = QRat::new(poly(&[1, 0, 0, 0, 0, 0, -1]), poly(&[1, 0, -1])).unwrap();
        assert_eq!(eval_rat(&g, &r(1, 1)).unwrap(), r(3, 1));
    }

    #[test]
    fn eval_rat_reports_genuine_poles() {
        // 1 / (q - 2) at q = 2.
        let f = QRat::new(QPoly::one(), poly(&[-2, 1])).unwrap();
        assert_eq!(eval_rat(&f, &r(2, 1)), Err(PolyError::Pole("2".into())));
        assert_eq!(eval_rat(&f, &r(3, 1)).unwrap(), r(1, 1));
        // 1 / (1 - q) at q = 1 is a true pole, not removable.
        let g = QRat::new(QPoly::one(), poly(&[1, -1])).unwrap();
        assert!(matches!(eval_rat(&g, &r(1, 1)), Err(PolyError::Pole(_))));
    }

    #[test]
    fn eval_rat_at_rational_points() {
        // (q^2 + 1)/(q + 3) at q = 1/2 -> (5/4)/(7/2) = 5/14.
        let f = QRat::new(poly(&[1, 0, 1]), poly(&[3, 1])).unwrap();
        assert_eq!(eval_rat(&f, &r(1, 2)).unwrap(), r(5, 14));
    }
}
