//! Closed-form right-hand sides of the verified congruences, transcribed
//! as exact rational functions (including Laurent prefactors such as
//! `q^{(1-n)/4}`, which become explicit `q^m` denominators).

use exact_poly::{q_integer, BigRational, QPoly, QRat};
use num::traits::{One, Zero};

use crate::poch::{qpoch, PochArg};
use crate::{QSeriesError, QSeriesResult};

/// Closed forms for the single-parameter congruences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormula {
    Thm2,
    Thm3,
    Thm4,
    GuoWy,
}

/// Closed forms for the two-parameter congruences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwoParameterFormula {
    Thm5,
    Thm6,
    Thm7,
    Thm8,
}

fn require_residue(formula: &'static str, n: u64, requirement: u64) -> QSeriesResult<()> {
    if n % 4 != requirement || n == 0 {
        return Err(QSeriesError::ResidueCondition {
            formula,
            requirement,
            n,
        });
    }
    Ok(())
}

/// `c0 + cn·q^n` as a polynomial.
fn binomial_poly(c0: BigRational, cn: BigRational, n: u64) -> QPoly {
    let mut coeffs = vec![BigRational::zero(); n as usize + 1];
    coeffs[0] = c0;
    coeffs[n as usize] = cn;
    QPoly::from_coeffs(coeffs)
}

fn poch(c: BigRational, e: i64, step: u64, k: u64) -> QRat {
    qpoch(&PochArg::new(c, e), step, k)
}

fn rational(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `(q²;q⁴)_m / (q⁴;q⁴)_m` — the central binomial analogue appearing in
/// every closed form.
fn central_ratio(m: u64) -> QRat {
    poch(rational(1), 2, 4, m)
        .div(&poch(rational(1), 4, 4, m))
        .expect("(q^4;q^4)_m is nonzero")
}

/// Exact transcription of the closed-form right-hand sides for the
/// single-parameter congruences. `n` must satisfy the residue condition of
/// the formula (`n ≡ 1 (mod 4)` for `Thm2`/`Thm4`/nonzero `GuoWy`,
/// `n ≡ 3 (mod 4)` for `Thm3`; `GuoWy` is 0 for `n ≡ 3 (mod 4)`).
pub fn rhs_closed(formula: ClosedFormula, n: u64) -> QSeriesResult<QRat> {
    match formula {
        ClosedFormula::Thm2 => {
            require_residue("thm2", n, 1)?;
            let m = (n - 1) / 4;
            // Σ_{j=1}^{m} q^{4j} / [4j]²
            let mut s = QRat::zero();
            for j in 1..=m {
                let t = QRat::new(
                    QPoly::monomial(BigRational::one(), (4 * j) as usize),
                    q_integer(4 * j).pow(2),
                )?;
                s = s.add(&t);
            }
            let bracket_n = QRat::from_poly(q_integer(n));
            let correction = QRat::one().sub(&bracket_n.mul(&bracket_n).mul(&s));
            // [n] · q^{(1-n)/4} · (q²;q⁴)_m/(q⁴;q⁴)_m · (1 - [n]²·Σ)
            let base = bracket_n.mul(&central_ratio(m)).mul(&correction);
            base.div_poly(&QPoly::monomial(BigRational::one(), m as usize))
                .map_err(Into::into)
        }
        ClosedFormula::Thm3 => {
            require_residue("thm3", n, 3)?;
            let m = (3 * n - 1) / 4;
            let ratio = central_ratio(m);
            // [3n] · q^{2n} (2 - q^n)/(1 + q^n)² · ((q²;q⁴)_m/(q⁴;q⁴)_m)²
            let front = QRat::new(
                q_integer(3 * n)
                    .mul(&binomial_poly(rational(2), rational(-1), n))
                    .shift(2 * n as usize),
                binomial_poly(rational(1), rational(1), n).pow(2),
            )?;
            Ok(front.mul(&ratio).mul(&ratio))
        }
        ClosedFormula::Thm4 => {
            require_residue("thm4", n, 1)?;
            let m = (n - 1) / 4;
            // Σ_{j=1}^{(n-1)/2} (-1)^{j+1} q^{2j} / [2j]²
            let mut s = QRat::zero();
            for j in 1..=(n - 1) / 2 {
                let sign = if j % 2 == 1 { 1 } else { -1 };
                let t = QRat::new(
                    QPoly::monomial(rational(sign), (2 * j) as usize),
                    q_integer(2 * j).pow(2),
                )?;
                s = s.add(&t);
            }
            let bracket_n = QRat::from_poly(q_integer(n));
            let two_minus = QRat::from_poly(binomial_poly(rational(2), rational(-1), n));
            let correction = QRat::one().add(&bracket_n.mul(&bracket_n).mul(&two_minus).mul(&s));
            let ratio = central_ratio(m);
            Ok(bracket_n.mul(&ratio).mul(&ratio).mul(&correction))
        }
        ClosedFormula::GuoWy => {
            if n == 0 || n % 2 == 0 {
                return Err(QSeriesError::BadOddN(n));
            }
            if n % 4 == 3 {
                return Ok(QRat::zero());
            }
            let m = (n - 1) / 4;
            let ratio = central_ratio(m);
            Ok(QRat::from_poly(q_integer(n)).mul(&ratio).mul(&ratio))
        }
    }
}

struct TwoParams {
    a: BigRational,
    b: BigRational,
    /// 1 / ((a - b)(1 - ab))
    unit_inv: BigRational,
    n: u64,
}

fn check_two_params(a: &BigRational, b: &BigRational, n: u64) -> QSeriesResult<TwoParams> {
    if a.is_zero() {
        return Err(QSeriesError::ZeroParameter("a"));
    }
    if b.is_zero() {
        return Err(QSeriesError::ZeroParameter("b"));
    }
    if a == b {
        return Err(QSeriesError::Degenerate(
            "a = b makes the (a - b) denominator vanish".into(),
        ));
    }
    let ab = a * b;
    if ab.is_one() {
        return Err(QSeriesError::Degenerate(
            "ab = 1 makes the (1 - ab) denominator vanish".into(),
        ));
    }
    let unit = (a - b) * (BigRational::one() - ab);
    Ok(TwoParams {
        a: a.clone(),
        b: b.clone(),
        unit_inv: unit.recip(),
        n,
    })
}

impl TwoParams {
    /// `(b - q^n)(ab - 1 - a² + a·q^n) / ((a - b)(1 - ab))` — the weight in
    /// front of the first term of the two-term closed forms.
    fn first_weight(&self) -> QRat {
        let p1 = binomial_poly(self.b.clone(), rational(-1), self.n);
        let c0 = &self.a * &self.b - BigRational::one() - &self.a * &self.a;
        let p2 = binomial_poly(c0, self.a.clone(), self.n);
        QRat::from_poly(p1.mul(&p2)).scale(&self.unit_inv)
    }

    /// `(1 - a·q^n)(a - q^n) / ((a - b)(1 - ab))`.
    fn second_weight(&self) -> QRat {
        let p1 = binomial_poly(BigRational::one(), -self.a.clone(), self.n);
        let p2 = binomial_poly(self.a.clone(), rational(-1), self.n);
        QRat::from_poly(p1.mul(&p2)).scale(&self.unit_inv)
    }

    /// `(1 - x·q^n)(x - q^n)(-1 - y² + y·q^n) / ∓((a - b)(1 - ab))` with the
    /// sign absorbed by the caller.
    fn cubic_weight(&self, x: &BigRational, y: &BigRational, negate: bool) -> QRat {
        let p1 = binomial_poly(BigRational::one(), -x.clone(), self.n);
        let p2 = binomial_poly(x.clone(), rational(-1), self.n);
        let c0 = -BigRational::one() - y * y;
        let p3 = binomial_poly(c0, y.clone(), self.n);
        let mut scale = self.unit_inv.clone();
        if negate {
            scale = -scale;
        }
        QRat::from_poly(p1.mul(&p2).mul(&p3)).scale(&scale)
    }
}

/// `x^m / q^m` as a rational function.
fn geometric_prefactor(x: &BigRational, m: u64) -> QRat {
    let mut num = BigRational::one();
    for _ in 0..m {
        num *= x;
    }
    QRat::new(
        QPoly::constant(num),
        QPoly::monomial(BigRational::one(), m as usize),
    )
    .expect("q^m is nonzero")
}

/// Exact transcription of the closed-form right-hand sides for the
/// two-parameter congruences. Preconditions: the residue condition on `n`
/// (`n ≡ 3 (mod 4)` for `Thm5`/`Thm7`, `n ≡ 1 (mod 4)` for `Thm6`/`Thm8`)
/// and non-degenerate parameters (`a, b ≠ 0`, `a ≠ b`, `ab ≠ 1`).
pub fn rhs_parametric(
    formula: TwoParameterFormula,
    n: u64,
    a: &BigRational,
    b: &BigRational,
) -> QSeriesResult<QRat> {
    let one = BigRational::one;
    match formula {
        TwoParameterFormula::Thm5 => {
            require_residue("thm5", n, 3)?;
            let p = check_two_params(a, b, n)?;
            let m1 = (n + 1) / 4;
            let m2 = (3 * n - 1) / 4;
            let b3 = b * b * b;
            let t1 = p
                .first_weight()
                .mul(&poch(one(), 3, 4, m1))
                .mul(&poch(b3.recip(), 0, 4, m1))
                .div(&poch(one(), -1, 4, m1))?
                .div(&poch(b3.clone(), 2, 4, m1))?
                .mul(&geometric_prefactor(&b3, m1));
            let t2 = p
                .second_weight()
                .mul(&poch(one(), 3, 4, m2))
                .mul(&poch(one(), 5, 4, m2))
                .div(&poch(a.clone(), 4, 4, m2))?
                .div(&poch(a.recip(), 4, 4, m2))?;
            Ok(t1.add(&t2))
        }
        TwoParameterFormula::Thm6 => {
            require_residue("thm6", n, 1)?;
            let p = check_two_params(a, b, n)?;
            let m = (n - 1) / 4;
            let t1 = p
                .first_weight()
                .mul(&poch(one(), 5, 4, m))
                .mul(&poch(b.recip(), 2, 4, m))
                .div(&poch(one(), 1, 4, m))?
                .div(&poch(b.clone(), 4, 4, m))?
                .mul(&geometric_prefactor(b, m));
            let t2 = p
                .second_weight()
                .mul(&poch(one(), 3, 4, m))
                .mul(&poch(one(), 5, 4, m))
                .div(&poch(a.clone(), 4, 4, m))?
                .div(&poch(a.recip(), 4, 4, m))?;
            Ok(t1.add(&t2))
        }
        TwoParameterFormula::Thm7 => {
            require_residue("thm7", n, 3)?;
            let p = check_two_params(a, b, n)?;
            let m1 = (3 * n - 1) / 4;
            let m2 = (n + 1) / 4;
            let b3 = b * b * b;
            // First term: weight over (b - a)(1 - ba) = -(a - b)(1 - ab).
            let t1 = p
                .cubic_weight(a, b, true)
                .mul(&poch(one(), 5, 4, m1))
                .mul(&poch(a.clone(), 2, 4, m1))
                .mul(&poch(a.recip(), 2, 4, m1))
                .div(&poch(one(), 1, 4, m1))?
                .div(&poch(a.recip(), 4, 4, m1))?
                .div(&poch(a.clone(), 4, 4, m1))?;
            let t2 = p
                .cubic_weight(b, a, false)
                .mul(&poch(one(), 3, 4, m2))
                .mul(&poch(b3.clone(), 0, 4, m2))
                .mul(&poch(b3.recip(), 0, 4, m2))
                .div(&poch(one(), -1, 4, m2))?
                .div(&poch(b3.recip(), 2, 4, m2))?
                .div(&poch(b3.clone(), 2, 4, m2))?;
            Ok(t1.add(&t2))
        }
        TwoParameterFormula::Thm8 => {
            require_residue("thm8", n, 1)?;
            let p = check_two_params(a, b, n)?;
            let m = (n - 1) / 4;
            let t1 = p
                .cubic_weight(a, b, true)
                .mul(&poch(one(), 5, 4, m))
                .mul(&poch(a.clone(), 2, 4, m))
                .mul(&poch(a.recip(), 2, 4, m))
                .div(&poch(one(), 1, 4, m))?
                .div(&poch(a.recip(), 4, 4, m))?
                .div(&poch(a.clone(), 4, 4, m))?;
            let t2 = p
                .cubic_weight(b, a, false)
                .mul(&poch(one(), 5, 4, m))
                .mul(&poch(b.clone(), 2, 4, m))
                .mul(&poch(b.recip(), 2, 4, m))
                .div(&poch(one(), 1, 4, m))?
                .div(&poch(b.recip(), 4, 4, m))?
                .div(&poch(b.clone(), 4, 4, m))?;
            Ok(t1.add(&t2))
        }
    }
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
    fn closed_forms_frozen_values_at_q_two() {
        let two = r(2, 1);
        assert_eq!(
            eval_rat(&rhs_closed(ClosedFormula::Thm2, 5).unwrap(), &two).unwrap(),
            big("-469681/2250")
        );
        assert_eq!(
            eval_rat(&rhs_closed(ClosedFormula::Thm3, 3).unwrap(), &two).unwrap(),
            big("-3204992/541875")
        );
        assert_eq!(
            eval_rat(&rhs_closed(ClosedFormula::Thm4, 5).unwrap(), &two).unwrap(),
            big("-1668141/125")
        );
        assert_eq!(
            eval_rat(&rhs_closed(ClosedFormula::GuoWy, 5).unwrap(), &two).unwrap(),
            big("31/25")
        );
    }

    #[test]
    fn zero_branch_of_the_alternating_closed_form() {
        assert!(rhs_closed(ClosedFormula::GuoWy, 3).unwrap().is_zero());
        assert!(rhs_closed(ClosedFormula::GuoWy, 7).unwrap().is_zero());
        assert!(!rhs_closed(ClosedFormula::GuoWy, 9).unwrap().is_zero());
    }

    #[test]
    fn residue_conditions_enforced() {
        assert!(matches!(
            rhs_closed(ClosedFormula::Thm2, 3),
            Err(QSeriesError::ResidueCondition { .. })
        ));
        assert!(matches!(
            rhs_closed(ClosedFormula::Thm3, 5),
            Err(QSeriesError::ResidueCondition { .. })
        ));
        assert!(matches!(
            rhs_closed(ClosedFormula::GuoWy, 4),
            Err(QSeriesError::BadOddN(4))
        ));
        assert!(matches!(
            rhs_parametric(TwoParameterFormula::Thm5, 5, &r(2, 1), &r(3, 1)),
            Err(QSeriesError::ResidueCondition { .. })
        ));
    }

    #[test]
    fn parametric_frozen_values_at_q_two() {
        let two = r(2, 1);
        let a = r(2, 1);
        let b = r(3, 1);
        assert_eq!(
            eval_rat(
                &rhs_parametric(TwoParameterFormula::Thm5, 3, &a, &b).unwrap(),
                &two
            )
            .unwrap(),
            big("-1168/107")
        );
        assert_eq!(
            eval_rat(
                &rhs_parametric(TwoParameterFormula::Thm6, 5, &a, &b).unwrap(),
                &two
            )
            .unwrap(),
            big("23845/94")
        );
        assert_eq!(
            eval_rat(
                &rhs_parametric(TwoParameterFormula::Thm7, 3, &a, &b).unwrap(),
                &two
            )
            .unwrap(),
            big("-131068/107")
        );
        assert_eq!(
            eval_rat(
                &rhs_parametric(TwoParameterFormula::Thm8, 5, &a, &b).unwrap(),
                &two
            )
            .unwrap(),
            big("-8776819/611")
        );
    }

    #[test]
    fn degenerate_parameters_are_rejected() {
        for formula in [
            TwoParameterFormula::Thm5,
            TwoParameterFormula::Thm7,
        ] {
            assert!(matches!(
                rhs_parametric(formula, 3, &r(2, 1), &r(2, 1)),
                Err(QSeriesError::Degenerate(_))
            ));
            assert!(matches!(
                rhs_parametric(formula, 3, &r(2, 1), &r(1, 2)),
                Err(QSeriesError::Degenerate(_))
            ));
            assert!(matches!(
                rhs_parametric(formula, 3, &r(0, 1), &r(3, 1)),
                Err(QSeriesError::ZeroParameter("a"))
            ));
            assert!(matches!(
                rhs_parametric(formula, 3, &r(2, 1), &r(0, 1)),
                Err(QSeriesError::ZeroParameter("b"))
            ));
        }
    }
}
