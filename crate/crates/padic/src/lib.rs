//! Exact p-adic side: valuations and residues of rational numbers,
//! Morita's p-adic Gamma function, exact truncated hypergeometric sums at
//! `q = 1`, and the closed-form right-hand sides of the classical
//! congruence claims.
//!
//! Everything is computed in exact big-integer arithmetic; a residue is an
//! integer in `[0, p^e)` together with its precision, and comparisons are
//! equality of residues — no floating point anywhere.

mod claims;
mod classical;
mod gamma;
mod residue;

pub use claims::{check_padic, classical_lhs, rhs_padic, PadicClaim, PadicVerdict};
pub use classical::{
    harmonic2, pochhammer, sum_classical, sum_classical_weighted, ClassicalFamily, ClassicalSum,
};
pub use gamma::gamma_p;
pub use num::{BigInt, BigRational, BigUint};
pub use residue::{rat_mod, vp, PadicResidue, PadicValuation};

use thiserror::Error;

/// Errors for precondition violations.  Failed congruences are verdict
/// states, never errors.
#[derive(Debug, Error)]
pub enum PadicError {
    /// The modulus base must be an odd prime.
    #[error("p = {0} is not an odd prime")]
    BadPrime(u64),
    /// Residues need at least one digit.
    #[error("precision must be positive")]
    ZeroPrecision,
    /// The rational has a pole at `p` where a `p`-adic integer is needed.
    #[error("{0} is not p-integral at p = {1}")]
    NotPIntegral(String, u64),
    /// The claim's residue condition on `p^r mod 4` is violated.
    #[error("{claim} requires p^r ≡ {requirement} (mod 4), got p^r ≡ {got} (mod 4)")]
    ResidueCondition {
        claim: &'static str,
        requirement: u64,
        got: u64,
    },
    /// The claim is stated for prime modulus only.
    #[error("{0} is stated for prime modulus only (r = 1), got r = {1}")]
    PrimeOnly(&'static str, u32),
    /// The claim excludes small primes.
    #[error("{0} requires p ≥ {1}, got p = {2}")]
    PrimeTooSmall(&'static str, u64, u64),
}

/// Convenience alias for results in this crate.
pub type PadicResult<T> = Result<T, PadicError>;

pub(crate) fn check_prime(p: u64) -> PadicResult<()> {
    if p < 3 || !exact_poly::is_prime_u64(p) {
        return Err(PadicError::BadPrime(p));
    }
    Ok(())
}

pub(crate) fn check_precision(e: u32) -> PadicResult<()> {
    if e == 0 {
        return Err(PadicError::ZeroPrecision);
    }
    Ok(())
}
