//! Polynomial GCD over `Q[q]` via small-prime modular images.
//!
//! Rational-coefficient Euclidean remainder sequences suffer catastrophic
//! coefficient growth on the operands this workspace produces (degrees in
//! the hundreds with multi-hundred-digit coefficients). Instead we use the
//! classical modular algorithm: reduce the primitive integer parts modulo
//! word-sized primes, take GCDs over `F_p` with plain Euclid, reconstruct
//! integer coefficients by CRT with symmetric lifting, and certify the
//! candidate by two exact integer divisions. Certification makes the result
//! unconditionally correct: a lifted candidate of modular-GCD degree that
//! divides both inputs *is* the GCD.

use num::traits::{ToPrimitive, Zero};
use num::{BigInt, Integer};

use crate::intpoly::{self, CrtAccum, PrimeGen};
use crate::poly::QPoly;
use crate::{PolyError, PolyResult};

/// Monic greatest common divisor in `Q[q]`.
///
/// * `gcd(0, 0)` is an error;
/// * `gcd(f, 0) = monic(f)`;
/// * nonzero constants are units, so any constant operand gives `1`.
pub fn poly_gcd(a: &QPoly, b: &QPoly) -> PolyResult<QPoly> {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => return Err(PolyError::GcdOfZeros),
        (true, false) => return Ok(b.monic()),
        (false, true) => return Ok(a.monic()),
        _ => {}
    }
    if a.is_constant() || b.is_constant() {
        return Ok(QPoly::one());
    }

    let pa = intpoly::primitive_part(&a.to_int().0);
    let pb = intpoly::primitive_part(&b.to_int().0);

    // Leading-coefficient multiplier: the true gcd's leading coefficient
    // divides lam = gcd(lc(pa), lc(pb)), so scaling each monic modular image
    // by lam makes the CRT-lifted coefficients integers.
    let la = pa.last().unwrap().clone();
    let lb = pb.last().unwrap().clone();
    let lam = la.gcd(&lb);

    let mut primes = PrimeGen::new();
    let mut acc: Option<CrtAccum> = None;
    let mut acc_deg = usize::MAX;
    let mut last_candidate: Option<Vec<BigInt>> = None;

    loop {
        let p = primes.next_prime();
        let pbig = BigInt::from(p);
        if (&la % &pbig).is_zero() || (&lb % &pbig).is_zero() {
            continue; // p kills a leading coefficient: skip
        }
        let ga = intpoly::to_mod(&pa, p);
        let gb = intpoly::to_mod(&pb, p);
        let mut g = intpoly::gcd_mod(ga, gb, p);
        if g.len() == 1 {
            return Ok(QPoly::one()); // coprime image => coprime inputs
        }
        let d = g.len() - 1;
        if d > acc_deg {
            continue; // unlucky prime (image gcd too big)
        }
        let lam_p = lam.mod_floor(&pbig).to_u64().expect("residue fits in u64");
        for c in &mut g {
            *c = intpoly::mulmod(*c, lam_p, p);
        }
        let fresh = d < acc_deg;
        if fresh {
            acc = Some(CrtAccum::new(&g, p));
            acc_deg = d;
            last_candidate = None;
        } else {
            acc.as_mut().unwrap().combine(&g, p);
        }

        let candidate = intpoly::primitive_part(&acc.as_ref().unwrap().lift());
        // Attempt certification when a fresh single-prime image appears
        // (small-coefficient GCDs — the common case — succeed immediately)
        // or once the lift has stabilized across two consecutive primes.
        let stable = last_candidate.as_deref() == Some(&candidate);
        if (fresh || stable)
            && candidate.len() == d + 1
            && intpoly::exact_div(&pa, &candidate).is_some()
            && intpoly::exact_div(&pb, &candidate).is_some()
        {
            return Ok(QPoly::from_int_coeffs(&candidate).monic());
        }
        last_candidate = Some(candidate);
    }
}
