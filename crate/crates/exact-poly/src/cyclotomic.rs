//! Cyclotomic polynomials.

use num::traits::Zero;
use num::BigRational;

use crate::poly::QPoly;
use crate::{PolyError, PolyResult};

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `q^d - 1`.
fn q_pow_minus_one(d: u64) -> QPoly {
    let mut coeffs = vec![BigRational::zero(); d as usize + 1];
    coeffs[0] = -BigRational::from_integer(1.into());
    coeffs[d as usize] = BigRational::from_integer(1.into());
    QPoly::from_coeffs(coeffs)
}

/// The `n`-th cyclotomic polynomial `Phi_n(q)`, computed exactly from the
/// Möbius product `Phi_m(q) = prod_{d | m} (q^d - 1)^{mu(m/d)}` over the
/// squarefree radical `m` of `n`, followed by the substitution
/// `q -> q^(n/m)`. All divisions are exact polynomial divisions.
pub fn cyclotomic(n: u64) -> PolyResult<QPoly> {
    if n == 0 {
        return Err(PolyError::CyclotomicIndex(0));
    }
    if n == 1 {
        return Ok(QPoly::from_ints(&[-1, 1]));
    }
    let primes = prime_factors(n);
    let rad: u64 = primes.iter().product();

    // Enumerate divisors d of rad as subsets of the prime set; for squarefree
    // rad, mu(rad/d) = (-1)^(omega(rad) - omega(d)).
    let k = primes.len();
    let mut numerator = QPoly::one();
    let mut denominators: Vec<u64> = Vec::new();
    for mask in 0u32..(1 << k) {
        let mut d = 1u64;
        let mut omega = 0usize;
        for (i, &p) in primes.iter().enumerate() {
            if mask & (1 << i) != 0 {
                d *= p;
                omega += 1;
            }
        }
        if (k - omega) % 2 == 0 {
            numerator = numerator.mul(&q_pow_minus_one(d));
        } else {
            denominators.push(d);
        }
    }
    let mut phi = numerator;
    for d in denominators {
        phi = phi
            .exact_div(&q_pow_minus_one(d))
            .expect("Moebius product divides exactly");
    }
    // Phi_n(q) = Phi_rad(q^(n/rad)).
    let stretch = (n / rad) as usize;
    if stretch > 1 {
        let mut coeffs = vec![BigRational::zero(); phi.degree().unwrap() * stretch + 1];
        for (i, c) in phi.coeffs().iter().enumerate() {
            coeffs[i * stretch] = c.clone();
        }
        phi = QPoly::from_coeffs(coeffs);
    }
    Ok(phi)
}
