//! Congruence checking for rational functions in `q`.
//!
//! A congruence `S ≡ T (mod M)` between rational functions is read in the
//! localized sense: writing `S − T = N / D` in lowest terms, the statement
//! holds when `gcd(D, M)` is constant (the difference is *integral* at the
//! modulus) and `M` divides `N`.  The two conditions are reported
//! separately so that a non-integral difference is never conflated with a
//! plain divisibility failure.
//!
//! Moduli are kept in factored form — cyclotomic factors `Φ_d(q)` with
//! multiplicities, plus optional *specialized* binomial factors such as
//! `1 − a·q^n` for rational `a` — and are checked to be pairwise coprime at
//! construction.  [`modulus_for`] builds the factored modulus attached to
//! each congruence family, and [`check_congruence`] produces a verdict with
//! a per-factor diagnostic report.

mod check;
mod crt;
mod modulus;
mod sample;

pub use check::{check_congruence, CongruenceVerdict, FactorCheck, FactorEntry};
pub use crt::verify_crt_relations;
pub use exact_poly::{BigInt, BigRational, QPoly, QRat, Valuation};
pub use modulus::{modulus_for, FactorKind, Modulus, ModulusFactor, QModulusClaim};
pub use sample::{degenerate_params, sample_params};

use thiserror::Error;

/// Errors arising while constructing moduli or validating parameters.
/// Checking a congruence never errors: failures are verdict states.
#[derive(Debug, Error)]
pub enum CongruenceError {
    /// Every modulus factor must have positive degree.
    #[error("modulus factor `{0}` is constant")]
    ConstantFactor(String),
    /// Factored moduli must be pairwise coprime so that per-factor
    /// diagnostics are meaningful.
    #[error("modulus factors `{0}` and `{1}` share a nonconstant common divisor")]
    NotCoprime(String, String),
    /// The congruence families are stated for odd `n ≥ 3` only.
    #[error("{0} requires an odd index n ≥ 3, got n = {1}")]
    BadOddN(&'static str, u64),
    /// A parameter pair was supplied to a parameter-free family.
    #[error("{0} does not take parameters (a, b)")]
    UnexpectedParams(&'static str),
    /// A two-parameter family was invoked without its parameters.
    #[error("{0} requires parameters (a, b)")]
    MissingParams(&'static str),
    /// The parameters fall in the excluded degenerate set.
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
    /// Propagated polynomial-arithmetic error.
    #[error(transparent)]
    Poly(#[from] exact_poly::PolyError),
}

/// Convenience alias for results in this crate.
pub type CongruenceResult<T> = Result<T, CongruenceError>;
