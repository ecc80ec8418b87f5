//! The two summation identities verified coefficientwise as truncated
//! power series: a four-parameter summation whose left side carries a
//! balanced ₃φ₂ correction term, and its three-parameter limiting case.
//!
//! Both sides are built from the same primitives: finite Pochhammer
//! products updated incrementally per summation index, truncated infinite
//! products, and exact series division.

use exact_poly::BigRational;
use num::traits::{One, Zero};

use crate::series::FormalSeries;
use crate::{QSeriesError, QSeriesResult};

/// `(c, e, step)` meaning the factor `(c·q^e; q^step)` (finite or infinite
/// according to use).
type Spec = (BigRational, u64, u64);

fn product_inf(specs: &[Spec], n: usize) -> FormalSeries {
    let mut s = FormalSeries::one(n);
    for (c, e, step) in specs {
        let mut m = *e;
        while m <= n as u64 {
            s.mul_binomial(c, m as usize);
            m += step;
        }
    }
    s
}

/// Extend finite Pochhammer products from index `k-1` to index `k` by one
/// binomial per factor.
fn extend(series: &mut FormalSeries, specs: &[Spec], k: u64) {
    for (c, e, step) in specs {
        series.mul_binomial(c, (e + step * (k - 1)) as usize);
    }
}

fn ensure_nonzero(x: &BigRational, name: &'static str) -> QSeriesResult<()> {
    if x.is_zero() {
        Err(QSeriesError::ZeroParameter(name))
    } else {
        Ok(())
    }
}

fn ensure_not_one(x: &BigRational, what: &str) -> QSeriesResult<()> {
    if x.is_one() {
        Err(QSeriesError::Degenerate(what.to_string()))
    } else {
        Ok(())
    }
}

/// Both sides of the four-parameter summation as series of order `n`.
///
/// The left side is the main `k`-sum (weight `(1 - a·q^{3k})/(1 - a)`,
/// geometric shift `q^k`) plus a prefactor times a balanced ₃φ₂ in base
/// `q²`; the right side is a ratio of eight infinite products. The `k`-sum
/// is truncated at `k = n` and the ₃φ₂ at `2j ≤ n`, which is exact at this
/// order because term `k`/`j` carries `q^k`/`q^{2j}`.
///
/// Degenerate configurations (a zero parameter, `a = 1`, or a vanishing
/// constant term in any denominator product) are reported with the
/// offending factor.
pub fn gr_sides(
    a: &BigRational,
    b: &BigRational,
    d: &BigRational,
    f: &BigRational,
    n: usize,
) -> QSeriesResult<(FormalSeries, FormalSeries)> {
    ensure_nonzero(a, "a")?;
    ensure_nonzero(b, "b")?;
    ensure_nonzero(d, "d")?;
    ensure_nonzero(f, "f")?;
    ensure_not_one(a, "the weight denominator (1 - a) vanishes: a = 1")?;
    ensure_not_one(
        &(d * f / a),
        "denominator factor (df/a; q)_inf has vanishing constant term: df = a",
    )?;
    ensure_not_one(
        &(a / f),
        "denominator factor (a/f; q)_inf has vanishing constant term: a = f",
    )?;
    ensure_not_one(
        &(b * f / a),
        "denominator factor (bf/a; q^2)_inf has vanishing constant term: bf = a",
    )?;

    let one = BigRational::one;
    let a2_df = a * a / (d * f);
    let weight_scale = (one() - a).recip();

    // Main sum.
    let num_specs: Vec<Spec> = vec![
        (a.clone(), 0, 1),
        (b.clone(), 0, 1),
        (b.recip(), 1, 1),
        (d.clone(), 0, 2),
        (f.clone(), 0, 2),
        (a2_df.clone(), 1, 2),
    ];
    let den_specs: Vec<Spec> = vec![
        (one(), 2, 2),
        (a / b, 2, 2),
        (a * b, 1, 2),
        (a / d, 1, 1),
        (a / f, 1, 1),
        (d * f / a, 0, 1),
    ];
    let mut num = FormalSeries::one(n);
    let mut den = FormalSeries::one(n);
    let mut lhs = FormalSeries::zero(n);
    for k in 0..=n as u64 {
        if k > 0 {
            extend(&mut num, &num_specs, k);
            extend(&mut den, &den_specs, k);
        }
        let mut term = num.mul(&den.inv()?)?;
        term.mul_binomial(a, (3 * k) as usize); // weight numerator (1 - a·q^{3k})
        let term = term.scale(&weight_scale).shift(k as usize);
        lhs = lhs.add(&term)?;
    }

    // Balanced 3phi2 in base q^2 with argument q^2.
    let phi_num: Vec<Spec> = vec![
        (f.clone(), 0, 2),
        (b * f / a, 0, 2),
        (f / (a * b), 1, 2),
    ];
    let phi_den: Vec<Spec> = vec![
        (one(), 2, 2),
        (f / d, 2, 2),
        (d * f * f / (a * a), 1, 2),
    ];
    let mut pnum = FormalSeries::one(n);
    let mut pden = FormalSeries::one(n);
    let mut phi = FormalSeries::zero(n);
    let mut j = 0u64;
    while 2 * j <= n as u64 {
        if j > 0 {
            extend(&mut pnum, &phi_num, j);
            extend(&mut pden, &phi_den, j);
        }
        let term = pnum.mul(&pden.inv()?)?.shift(2 * j as usize);
        phi = phi.add(&term)?;
        j += 1;
    }

    // Prefactor: ratio of infinite products.
    let pre_num = product_inf(
        &[
            (a.clone(), 1, 1),
            (f / a, 0, 1),
            (b.clone(), 0, 1),
            (b.recip(), 1, 1),
            (d.clone(), 0, 2),
            (a2_df, 1, 2),
            (f / d, 2, 2),
            (d * f * f / (a * a), 1, 2),
        ],
        n,
    );
    let pre_den = product_inf(
        &[
            (a / f, 0, 1),
            (f / a, 1, 1),
            (a / d, 1, 1),
            (d * f / a, 0, 1),
            (a / b, 2, 2),
            (a * b, 1, 2),
            (f / (a * b), 1, 2),
            (b * f / a, 0, 2),
        ],
        n,
    );
    let prefactor = pre_num.mul(&pre_den.inv()?)?;
    let lhs = lhs.add(&prefactor.mul(&phi)?)?;

    // Right side.
    let rhs_num = product_inf(
        &[
            (a.clone(), 1, 1),
            (f / a, 0, 1),
            (a / (b * d), 2, 2),
            (a * b / d, 1, 2),
            (b * d * f / a, 0, 2),
            (d * f / (a * b), 1, 2),
        ],
        n,
    );
    let rhs_den = product_inf(
        &[
            (a / d, 1, 1),
            (d * f / a, 0, 1),
            (a / b, 2, 2),
            (a * b, 1, 2),
            (b * f / a, 0, 2),
            (f / (a * b), 1, 2),
        ],
        n,
    );
    let rhs = rhs_num.mul(&rhs_den.inv()?)?;
    Ok((lhs, rhs))
}

/// Both sides of the three-parameter limiting identity as series of order
/// `n`. The `k`-th term carries `q^{k(k+1)/2} (a/f)^k`, so the sum is
/// truncated at `k(k+1)/2 ≤ n`; the right side is a ratio of eight base-`q²`
/// infinite products.
pub fn gr_a_sides(
    a: &BigRational,
    b: &BigRational,
    f: &BigRational,
    n: usize,
) -> QSeriesResult<(FormalSeries, FormalSeries)> {
    ensure_nonzero(a, "a")?;
    ensure_nonzero(b, "b")?;
    ensure_nonzero(f, "f")?;
    ensure_not_one(a, "the weight denominator (1 - a) vanishes: a = 1")?;

    let one = BigRational::one;
    let num_specs: Vec<Spec> = vec![
        (a.clone(), 0, 1),
        (b.clone(), 0, 1),
        (b.recip(), 1, 1),
        (f.clone(), 0, 2),
    ];
    let den_specs: Vec<Spec> = vec![
        (one(), 2, 2),
        (a / b, 2, 2),
        (a * b, 1, 2),
        (a / f, 1, 1),
    ];
    let weight_scale = (one() - a).recip();
    let ratio = a / f;

    let mut num = FormalSeries::one(n);
    let mut den = FormalSeries::one(n);
    let mut lhs = FormalSeries::zero(n);
    let mut geometric = BigRational::one();
    let mut k = 0u64;
    while (k * (k + 1) / 2) as usize <= n {
        if k > 0 {
            extend(&mut num, &num_specs, k);
            extend(&mut den, &den_specs, k);
            geometric *= &ratio;
        }
        let mut term = num.mul(&den.inv()?)?;
        term.mul_binomial(a, (3 * k) as usize);
        let term = term
            .scale(&(&weight_scale * &geometric))
            .shift((k * (k + 1) / 2) as usize);
        lhs = lhs.add(&term)?;
        k += 1;
    }

    let rhs_num = product_inf(
        &[
            (a.clone(), 1, 2),
            (a.clone(), 2, 2),
            (a / (b * f), 2, 2),
            (a * b / f, 1, 2),
        ],
        n,
    );
    let rhs_den = product_inf(
        &[
            (a / f, 1, 2),
            (a / f, 2, 2),
            (a / b, 2, 2),
            (a * b, 1, 2),
        ],
        n,
    );
    let rhs = rhs_num.mul(&rhs_den.inv()?)?;
    Ok((lhs, rhs))
}
