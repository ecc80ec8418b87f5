//! Morita's p-adic Gamma function.

use crate::residue::{rat_mod, PadicResidue};
use crate::PadicResult;
use num::traits::{One, ToPrimitive, Zero};
use num::{BigRational, BigUint, Integer};

/// Morita's p-adic Gamma function at a p-adic integer `x`, to `e` digits.
///
/// On nonnegative integers `Γ_p(n) = (−1)^n ∏_{1≤k<n, p∤k} k`, and `Γ_p`
/// extends 1-Lipschitz-continuously to the p-adic integers; so lifting `x`
/// to the unique `n ∈ [0, p^e)` with `n ≡ x (mod p^e)` and returning
/// `Γ_p(n) mod p^e` gives all `e` digits exactly.
pub fn gamma_p(x: &BigRational, p: u64, e: u32) -> PadicResult<PadicResidue> {
    let lift = rat_mod(x, p, e)?;
    let m = lift.modulus();
    let n = lift.value().clone();

    let mut unit_product = BigUint::one();
    if let (Some(n64), Some(m64)) = (n.to_u64(), m.to_u64()) {
        let mut acc: u64 = 1;
        for k in 1..n64 {
            if k % p != 0 {
                acc = ((acc as u128 * k as u128) % m64 as u128) as u64;
            }
        }
        unit_product = BigUint::from(acc);
    } else {
        let pbig = BigUint::from(p);
        let mut k = BigUint::one();
        while k < n {
            if !(&k % &pbig).is_zero() {
                unit_product = unit_product * &k % &m;
            }
            k += 1u32;
        }
    }

    let value = if n.is_even() {
        unit_product
    } else {
        // −unit_product mod p^e; the product is a unit, hence nonzero.
        &m - unit_product
    };
    PadicResidue::new(p, e, value)
}
