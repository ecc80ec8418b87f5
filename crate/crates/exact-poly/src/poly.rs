//! Dense polynomials in `q` over the rationals.

use std::fmt;

use num::traits::{One, Signed, Zero};
use num::{BigInt, BigRational};

use crate::intpoly::{self, IPoly};
use crate::{PolyError, PolyResult};

/// A polynomial in `q` with exact rational coefficients.
///
/// Coefficients are stored dense and little-endian (`coeffs[i]` multiplies
/// `q^i`) with no trailing zeros, so equality of values coincides with
/// structural equality. The zero polynomial is the empty coefficient vector
/// and has degree `None`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        QPoly::constant(BigRational::one())
    }

    /// The monomial `q`.
    pub fn q() -> Self {
        QPoly::monomial(BigRational::one(), 1)
    }

    /// A constant polynomial.
    pub fn constant(c: BigRational) -> Self {
        let mut p = QPoly { coeffs: vec![c] };
        p.normalize();
        p
    }

    /// `c * q^exp`.
    pub fn monomial(c: BigRational, exp: usize) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); exp + 1];
        coeffs[exp] = c;
        QPoly { coeffs }
    }

    /// Build from little-endian coefficients (trailing zeros are trimmed).
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = QPoly { coeffs };
        p.normalize();
        p
    }

    /// Build from little-endian integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        QPoly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub(crate) fn from_int_coeffs(coeffs: &[BigInt]) -> Self {
        QPoly::from_coeffs(
            coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Little-endian coefficient slice (no trailing zeros).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `q^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let mut out = vec![BigRational::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        QPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        let mut out = vec![BigRational::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        QPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Product, computed over the integer layer (clear denominators once,
    /// multiply in `Z[q]`, divide back) — much faster than rational
    /// coefficient arithmetic for the operand sizes this workspace produces.
    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let (ia, da) = self.to_int();
        let (ib, db) = other.to_int();
        let prod = intpoly::mul(&ia, &ib);
        let den = BigRational::from_integer(da * db);
        QPoly {
            coeffs: prod
                .iter()
                .map(|c| BigRational::from_integer(c.clone()) / &den)
                .collect(),
        }
    }

    /// Multiply by the scalar `c`.
    pub fn scale(&self, c: &BigRational) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiply by `q^m`.
    pub fn shift(&self, m: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); m];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    /// Multiply by the binomial `1 - c*q^m` in one pass (the workhorse of
    /// Pochhammer construction: O(deg) big-rational operations, no general
    /// convolution).
    pub fn mul_binomial(&self, c: &BigRational, m: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        if c.is_zero() {
            return self.clone();
        }
        let n = self.coeffs.len();
        let mut out = vec![BigRational::zero(); n + m];
        out[..n].clone_from_slice(&self.coeffs);
        for i in 0..n {
            let t = &self.coeffs[i] * c;
            out[i + m] -= t;
        }
        QPoly::from_coeffs(out)
    }

    /// Exact synthetic division by `1 - q`; `None` when `q = 1` is not a root.
    pub fn div_one_minus_q(&self) -> Option<QPoly> {
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        // self = (1 - q) * Q  =>  Q_i = self_i + Q_{i-1}, with the final
        // carry equal to self evaluated at 1 (must vanish for exactness).
        let n = self.coeffs.len();
        let mut out = Vec::with_capacity(n - 1);
        let mut carry = BigRational::zero();
        for i in 0..n - 1 {
            carry += &self.coeffs[i];
            out.push(carry.clone());
        }
        carry += &self.coeffs[n - 1];
        if !carry.is_zero() {
            return None;
        }
        Some(QPoly::from_coeffs(out))
    }

    /// `self^e` by repeated squaring.
    pub fn pow(&self, e: u32) -> QPoly {
        if e == 0 {
            return QPoly::one();
        }
        let mut base = self.clone();
        let mut exp = e;
        let mut acc = QPoly::one();
        while exp > 1 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc.mul(&base)
    }

    /// Divide every coefficient by the leading one (zero stays zero).
    pub fn monic(&self) -> QPoly {
        match self.leading() {
            None => QPoly::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact division: `self / d` when `d` divides `self` in `Q[q]`,
    /// `None` otherwise. Goes through primitive integer parts (Gauss's
    /// lemma guarantees the integer division is exact whenever the rational
    /// one is).
    pub fn exact_div(&self, d: &QPoly) -> Option<QPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        let (ia, da) = self.to_int();
        let (ib, db) = d.to_int();
        let ca = intpoly::content(&ia);
        let cb = intpoly::content(&ib);
        let pa = intpoly::primitive_part(&ia);
        let pb = intpoly::primitive_part(&ib);
        let quot = intpoly::exact_div(&pa, &pb)?;
        // Restore scalars: self = (sa * ca / da) * pa-with-sign ... both
        // primitive parts were sign-normalized, so track signs explicitly.
        let sign_a = if ia.last().unwrap().is_negative() { -1 } else { 1 };
        let sign_b = if ib.last().unwrap().is_negative() { -1 } else { 1 };
        let mut scalar = BigRational::new(ca * db, cb * da);
        if sign_a * sign_b < 0 {
            scalar = -scalar;
        }
        Some(QPoly::from_int_coeffs(&quot).scale(&scalar))
    }

    /// Clear denominators: returns `(p, d)` with `self * d = p` over `Z[q]`
    /// and `d > 0` the LCM of the coefficient denominators.
    pub(crate) fn to_int(&self) -> (IPoly, BigInt) {
        use num::Integer as _;
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: IPoly = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (ints, den)
    }

    /// Division with remainder over `Q[q]`.
    pub fn divrem(&self, rhs: &QPoly) -> PolyResult<(QPoly, QPoly)> {
        if rhs.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let db = rhs.coeffs.len() - 1;
        if self.coeffs.len() <= db {
            return Ok((QPoly::zero(), self.clone()));
        }
        let lead_inv = rhs.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - db;
        let mut quot = vec![BigRational::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = std::mem::replace(&mut rem[i + db], BigRational::zero());
            if top.is_zero() {
                continue;
            }
            let qi = top * &lead_inv;
            for j in 0..db {
                let t = &qi * &rhs.coeffs[j];
                rem[i + j] -= t;
            }
            quot[i] = qi;
        }
        rem.truncate(db);
        Ok((QPoly::from_coeffs(quot), QPoly::from_coeffs(rem)))
    }
}

/// The q-integer `[r] = 1 + q + q^2 + … + q^(r-1)` (so `[0] = 0`).
pub fn q_integer(r: u64) -> QPoly {
    QPoly::from_coeffs(vec![BigRational::one(); r as usize])
}

/// Binary polynomial operations exposed by [`poly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Exact polynomial arithmetic; total on all inputs.
pub fn poly_arith(a: &QPoly, b: &QPoly, op: PolyOp) -> QPoly {
    match op {
        PolyOp::Add => a.add(b),
        PolyOp::Sub => a.sub(b),
        PolyOp::Mul => a.mul(b),
    }
}

/// Division with remainder: `a = q*b + r` with `deg r < deg b`.
/// Fails only when `b` is zero.
pub fn poly_divrem(a: &QPoly, b: &QPoly) -> PolyResult<(QPoly, QPoly)> {
    a.divrem(b)
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let unit = mag.is_one();
            if i == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !unit {
                    if mag.is_integer() {
                        write!(f, "{}*", mag)?;
                    } else {
                        write!(f, "({})*", mag)?;
                    }
                }
                if i == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{}", i)?;
                }
            }
        }
        Ok(())
    }
}
