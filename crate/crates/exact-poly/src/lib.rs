//! Exact arithmetic for univariate polynomials and rational functions in `q`
//! with arbitrary-precision rational coefficients.
//!
//! This crate is the arithmetic bedrock for the rest of the workspace:
//!
//! * [`QPoly`] — dense polynomials over `Q` with exact `BigRational`
//!   coefficients, plus division with remainder and a fast modular GCD;
//! * [`QRat`] — rational functions kept in canonical reduced form
//!   (coprime numerator/denominator, monic denominator);
//! * [`cyclotomic`] — cyclotomic polynomials via the Möbius product;
//! * [`q_integer`] — the polynomial `1 + q + … + q^(r-1)`;
//! * [`valuation_at`] — order of vanishing of a rational function at an
//!   irreducible polynomial;
//! * [`eval_rat`] — evaluation at a rational point, with removable-pole
//!   cancellation at `q = 1`.
//!
//! All operations are exact; nothing in this crate rounds or approximates.

mod cyclotomic;
mod gcd;
mod intpoly;
mod poly;
mod rat;

pub use cyclotomic::cyclotomic;
pub use gcd::poly_gcd;
pub use intpoly::is_prime_u64;
pub use num::{BigInt, BigRational, BigUint};
pub use poly::{poly_arith, poly_divrem, q_integer, PolyOp, QPoly};
pub use rat::{eval_rat, rat_arith, valuation_at, QRat, RatOp, Valuation};

/// Errors produced by exact polynomial / rational-function arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    /// Division (or inversion) by the zero polynomial or zero rational function.
    #[error("division by zero")]
    DivisionByZero,
    /// `gcd(0, 0)` has no meaningful normalization.
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,
    /// Cyclotomic polynomials are indexed by integers `n >= 1`.
    #[error("cyclotomic index must be >= 1, got {0}")]
    CyclotomicIndex(u64),
    /// Valuations are taken at nonconstant (irreducible) polynomials only.
    #[error("valuation requires a nonconstant modulus polynomial")]
    ConstantModulus,
    /// The evaluation point is a genuine pole of the rational function.
    #[error("pole at q = {0}")]
    Pole(String),
}

/// Convenience alias used throughout the crate.
pub type PolyResult<T> = Result<T, PolyError>;
