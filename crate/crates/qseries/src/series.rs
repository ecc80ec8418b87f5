//! Truncated formal power series over the rationals.

use std::fmt;

use exact_poly::{BigRational, QRat};
use num::traits::{One, Zero};

use crate::{QSeriesError, QSeriesResult};

/// A power series in `q` truncated at a fixed order `N`: exactly the
/// coefficients of `q^0 … q^N` are stored, and no operation ever reads or
/// writes beyond index `N`. Equality is coefficientwise through the order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSeries {
    order: usize,
    coeffs: Vec<BigRational>,
}

impl FormalSeries {
    /// The zero series at order `n`.
    pub fn zero(n: usize) -> Self {
        FormalSeries {
            order: n,
            coeffs: vec![BigRational::zero(); n + 1],
        }
    }

    /// The constant series 1 at order `n`.
    pub fn one(n: usize) -> Self {
        let mut s = FormalSeries::zero(n);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// Build from coefficients (padded with zeros / truncated to order `n`).
    pub fn from_coeffs(n: usize, coeffs: Vec<BigRational>) -> Self {
        let mut c = coeffs;
        c.resize(n + 1, BigRational::zero());
        c.truncate(n + 1);
        FormalSeries { order: n, coeffs: c }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `q^i`; panics beyond the order (that would be a logic
    /// error in the caller, not missing data).
    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check_order(&self, other: &FormalSeries) -> QSeriesResult<()> {
        if self.order != other.order {
            return Err(QSeriesError::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn add(&self, other: &FormalSeries) -> QSeriesResult<FormalSeries> {
        self.check_order(other)?;
        Ok(FormalSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &FormalSeries) -> QSeriesResult<FormalSeries> {
        self.check_order(other)?;
        Ok(FormalSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn mul(&self, other: &FormalSeries) -> QSeriesResult<FormalSeries> {
        self.check_order(other)?;
        let n = self.order;
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(FormalSeries {
            order: n,
            coeffs: out,
        })
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inv(&self) -> QSeriesResult<FormalSeries> {
        if self.coeffs[0].is_zero() {
            return Err(QSeriesError::DivisorNotUnit);
        }
        let n = self.order;
        let c0 = self.coeffs[0].recip();
        let mut out = vec![BigRational::zero(); n + 1];
        out[0] = c0.clone();
        for i in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=i {
                if !self.coeffs[j].is_zero() && !out[i - j].is_zero() {
                    acc += &self.coeffs[j] * &out[i - j];
                }
            }
            out[i] = -(acc * &c0);
        }
        Ok(FormalSeries {
            order: n,
            coeffs: out,
        })
    }

    pub fn div(&self, other: &FormalSeries) -> QSeriesResult<FormalSeries> {
        self.check_order(other)?;
        self.mul(&other.inv()?)
    }

    /// Multiply by the scalar `c`.
    pub fn scale(&self, c: &BigRational) -> FormalSeries {
        FormalSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiply by `q^m`, truncating at the order.
    pub fn shift(&self, m: usize) -> FormalSeries {
        let n = self.order;
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + m <= n {
                out[i + m] = c.clone();
            }
        }
        FormalSeries {
            order: n,
            coeffs: out,
        }
    }

    /// Multiply in place by the binomial `1 - c*q^m` (truncated): the core
    /// update for building Pochhammer products without convolutions.
    pub fn mul_binomial(&mut self, c: &BigRational, m: usize) {
        if c.is_zero() {
            return;
        }
        let n = self.order;
        if m > n {
            return;
        }
        // Descend so each original coefficient is read before it is updated.
        for i in (m..=n).rev() {
            let t = &self.coeffs[i - m] * c;
            self.coeffs[i] -= t;
        }
    }

    /// Negate in place.
    pub fn negate(&mut self) {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
    }
}

impl fmt::Display for FormalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})q", c)?,
                _ => write!(f, "({})q^{}", c, i)?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}

/// Binary operations exposed by [`series_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact arithmetic on equal-order truncated series.
pub fn series_arith(
    a: &FormalSeries,
    b: &FormalSeries,
    op: SeriesOp,
) -> QSeriesResult<FormalSeries> {
    match op {
        SeriesOp::Add => a.add(b),
        SeriesOp::Sub => a.sub(b),
        SeriesOp::Mul => a.mul(b),
        SeriesOp::Div => a.div(b),
    }
}

/// Taylor expansion of a rational function at `q = 0` through order `n`.
/// Fails when the (reduced) denominator vanishes at `q = 0`.
pub fn series_of_rat(f: &QRat, n: usize) -> QSeriesResult<FormalSeries> {
    let den = f.den();
    if den.coeff(0).is_zero() {
        return Err(QSeriesError::PoleAtZero);
    }
    let num = f.num();
    let d0 = den.coeff(0).recip();
    let dcs: Vec<BigRational> = (0..=n).map(|i| den.coeff(i)).collect();
    let mut out = vec![BigRational::zero(); n + 1];
    for i in 0..=n {
        let mut acc = num.coeff(i);
        for j in 1..=i {
            if !dcs[j].is_zero() && !out[i - j].is_zero() {
                acc -= &dcs[j] * &out[i - j];
            }
        }
        out[i] = acc * &d0;
    }
    Ok(FormalSeries {
        order: n,
        coeffs: out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_poly::{BigInt, QPoly};

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn series(n: usize, v: &[i64]) -> FormalSeries {
        FormalSeries::from_coeffs(n, v.iter().map(|&c| r(c, 1)).collect())
    }

    #[test]
    fn geometric_series_by_division() {
        // 1 / (1 - q) at N = 3.
        let one = FormalSeries::one(3);
        let denom = series(3, &[1, -1]);
        let g = series_arith(&one, &denom, SeriesOp::Div).unwrap();
        assert_eq!(g, series(3, &[1, 1, 1, 1]));
    }

    #[test]
    fn multiplication_by_one_is_identity() {
        let a = series(4, &[3, 0, -2, 5, 1]);
        assert_eq!(a.mul(&FormalSeries::one(4)).unwrap(), a);
    }

    #[test]
    fn division_round_trips() {
        let a = FormalSeries::from_coeffs(5, vec![r(2, 3), r(-1, 2), r(0, 1), r(7, 5)]);
        let b = FormalSeries::from_coeffs(5, vec![r(1, 4), r(5, 1), r(-2, 7)]);
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.div(&b).unwrap(), a);
    }

    #[test]
    fn division_requires_unit_constant_term() {
        let a = FormalSeries::one(3);
        let b = series(3, &[0, 1]);
        assert_eq!(a.div(&b), Err(QSeriesError::DivisorNotUnit));
    }

    #[test]
    fn order_mismatch_is_rejected() {
        let a = FormalSeries::one(3);
        let b = FormalSeries::one(4);
        assert_eq!(
            series_arith(&a, &b, SeriesOp::Add),
            Err(QSeriesError::OrderMismatch(3, 4))
        );
    }

    #[test]
    fn series_of_rat_examples() {
        // (q + 1) -> 1 + q at N = 2.
        let f = QRat::from_poly(QPoly::from_ints(&[1, 1]));
        assert_eq!(series_of_rat(&f, 2).unwrap(), series(2, &[1, 1, 0]));
        // 1/(1 - q^2) -> 1 + q^2 + q^4 at N = 4.
        let g = QRat::new(QPoly::one(), QPoly::from_ints(&[1, 0, -1])).unwrap();
        assert_eq!(series_of_rat(&g, 4).unwrap(), series(4, &[1, 0, 1, 0, 1]));
        // q in the denominator is a pole at 0.
        let h = QRat::new(QPoly::one(), QPoly::from_ints(&[0, 1])).unwrap();
        assert_eq!(series_of_rat(&h, 4), Err(QSeriesError::PoleAtZero));
    }

    #[test]
    fn binomial_multiplication_matches_general_product() {
        let mut a = series(6, &[1, 4, -2, 0, 3]);
        let b = a.clone();
        let binom = series(6, &[1, 0, 0, -5]);
        a.mul_binomial(&r(5, 1), 3);
        assert_eq!(a, b.mul(&binom).unwrap());
        // A binomial beyond the order is invisible.
        let mut c = b.clone();
        c.mul_binomial(&r(5, 1), 7);
        assert_eq!(c, b);
    }

    #[test]
    fn display_is_readable() {
        let s = series(3, &[1, 0, -2]);
        assert_eq!(s.to_string(), "1 + (-2)q^2 + O(q^4)");
        assert_eq!(FormalSeries::zero(1).to_string(), "0 + O(q^2)");
    }
}
