//! q-series building blocks: Pochhammer symbols, truncated formal power
//! series, and the exact sum/product builders behind every congruence and
//! identity checked by this workspace.
//!
//! Everything here is exact rational arithmetic: finite q-Pochhammer
//! symbols are rational functions ([`qpoch`]), infinite ones are truncated
//! power series ([`qpoch_inf`]), and the hypergeometric-style sums are
//! assembled over a common denominator with one reduction at the end.

mod closed;
mod engine;
mod gr;
mod poch;
mod series;
mod sums;

pub use closed::{rhs_closed, rhs_parametric, ClosedFormula, TwoParameterFormula};
pub use exact_poly::{BigInt, BigRational, QPoly, QRat};
pub use gr::{gr_a_sides, gr_sides};
pub use poch::{qpoch, qpoch_inf, PochArg};
pub use series::{series_arith, series_of_rat, FormalSeries, SeriesOp};
pub use sums::{
    sum_a, sum_a_weighted, sum_b, sum_b_exponent, sum_c, sum_c_weighted, sum_lemma1,
    sum_lemma1_weighted, sum_lemma2, sum_lemma2_weighted,
};

/// Errors from series arithmetic and sum builders.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QSeriesError {
    /// Truncated series of different orders cannot be combined.
    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    /// Series division requires the divisor's constant term to be nonzero.
    #[error("series division requires a nonzero constant term")]
    DivisorNotUnit,
    /// An infinite product with a negative leading exponent is not a formal
    /// power series.
    #[error("infinite product requires a nonnegative q-exponent, got {0}")]
    NegativeExponent(i64),
    /// The rational function has a pole at q = 0 and no series expansion.
    #[error("no power-series expansion: pole at q = 0")]
    PoleAtZero,
    /// Truncated sums only admit the two bounds used by the congruences.
    #[error("truncation bound must be (n-1)/2 = {half} or n-1 = {full}, got {got}")]
    BadTruncation { half: u64, full: u64, got: u64 },
    /// The sum families are indexed by odd positive integers.
    #[error("index must be an odd positive integer, got {0}")]
    BadOddN(u64),
    /// A parameter that must be nonzero was zero.
    #[error("parameter {0} must be nonzero")]
    ZeroParameter(&'static str),
    /// The requested closed form is only defined under a residue condition.
    #[error("{formula} requires n == {requirement} (mod 4), got n = {n}")]
    ResidueCondition {
        formula: &'static str,
        requirement: u64,
        n: u64,
    },
    /// A parameter choice makes a denominator factor vanish.
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
    /// Underlying polynomial arithmetic error.
    #[error(transparent)]
    Poly(#[from] exact_poly::PolyError),
}

pub type QSeriesResult<T> = Result<T, QSeriesError>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_messages_name_the_problem() {
        assert_eq!(
            QSeriesError::OrderMismatch(3, 5).to_string(),
            "series orders differ: 3 vs 5"
        );
        assert_eq!(
            QSeriesError::BadTruncation {
                half: 1,
                full: 2,
                got: 7
            }
            .to_string(),
            "truncation bound must be (n-1)/2 = 1 or n-1 = 2, got 7"
        );
    }
}
