//! Reconstruction-coefficient identities for the parametric moduli.
//!
//! The two-parameter congruence families combine residues modulo the
//! pairwise coprime factors `(1 − a·q^n)(a − q^n)`, `b − q^n` (and the
//! `a ↔ b` mirrored pair) using explicit polynomial coefficients with unit
//! constant denominators.  Each coefficient must be ≡ 1 modulo its own
//! factor block; [`verify_crt_relations`] checks all four identities at a
//! concrete specialization.

use crate::modulus::{affine, minus_q_pow, one_minus};
use crate::sample::degenerate_params;
use crate::{CongruenceError, CongruenceResult};
use exact_poly::{poly_divrem, BigRational, QPoly};
use num::traits::One;

/// `numer / unit ≡ 1 (mod modulus)`, i.e. `modulus | (numer − unit)`.
fn unit_congruence(numer: &QPoly, unit: &BigRational, modulus: &QPoly) -> bool {
    let shifted = numer.sub(&QPoly::constant(unit.clone()));
    if shifted.is_zero() {
        return true;
    }
    match poly_divrem(&shifted, modulus) {
        Ok((_, rem)) => rem.is_zero(),
        Err(_) => false,
    }
}

/// Verify the four reconstruction-coefficient congruences at `(n, a, b)`:
///
/// 1. `(b − q^n)(ab − 1 − a² + a·q^n) ≡ (a − b)(1 − ab)  (mod (1 − a·q^n)(a − q^n))`
/// 2. `(1 − a·q^n)(a − q^n)           ≡ (a − b)(1 − ab)  (mod b − q^n)`
/// 3. `(1 − b·q^n)(b − q^n)(−1 − a² + a·q^n) ≡ (a − b)(1 − ab)  (mod (1 − a·q^n)(a − q^n))`
/// 4. `(1 − a·q^n)(a − q^n)(−1 − b² + b·q^n) ≡ (b − a)(1 − ba)  (mod (1 − b·q^n)(b − q^n))`
///
/// Returns `true` iff all four hold.  Degenerate `(a, b)` (see
/// [`degenerate_params`]) make the unit denominators vanish or the moduli
/// collide and are rejected as an error.
pub fn verify_crt_relations(n: u64, a: &BigRational, b: &BigRational) -> CongruenceResult<bool> {
    if n == 0 {
        return Err(CongruenceError::BadOddN("crt", 0));
    }
    if degenerate_params(a, b) {
        return Err(CongruenceError::Degenerate(format!(
            "(a, b) = ({a}, {b}) is in the excluded set"
        )));
    }
    let n = n as usize;
    let one = BigRational::one();

    let a_pair = one_minus(a, n).mul(&minus_q_pow(a, n));
    let b_pair = one_minus(b, n).mul(&minus_q_pow(b, n));
    let b_single = minus_q_pow(b, n);
    // (a − b)(1 − ab), the shared unit denominator.
    let unit = (a - b) * (&one - a * b);
    let unit_mirror = -unit.clone();

    // ab − 1 − a² + a·q^n  and the quadratic tails −1 − x² + x·q^n.
    let mixed_tail = affine(a * b - &one - a * a, a.clone(), n);
    let a_tail = affine(-&one - a * a, a.clone(), n);
    let b_tail = affine(-&one - b * b, b.clone(), n);

    let rel1 = unit_congruence(&b_single.mul(&mixed_tail), &unit, &a_pair);
    let rel2 = unit_congruence(&a_pair, &unit, &b_single);
    let rel3 = unit_congruence(&b_pair.mul(&a_tail), &unit, &a_pair);
    let rel4 = unit_congruence(&a_pair.mul(&b_tail), &unit_mirror, &b_pair);

    Ok(rel1 && rel2 && rel3 && rel4)
}
